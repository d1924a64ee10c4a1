#include "ringlab/radical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"

namespace ringlab {

namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// least n >= 1 with x^n = 0, or nullopt if the power sequence cycles
// without hitting zero
std::optional<uint64_t> element_nilexponent(const Ring& r, const Vec& x) {
  std::set<Vec> seen;
  Vec p = x;
  uint64_t n = 1;
  while (true) {
    if (r->is_zero(p)) return n;
    if (!seen.insert(p).second) return std::nullopt;
    p = r->mul(p, x);
    ++n;
  }
}

// span of all t-fold products of elements of s, iterated until zero or
// stabilization; returns the class (least t with all t-fold products zero)
// or nullopt
std::optional<uint64_t> subgroup_nilpotency_class(const AdditiveSubgroup& s) {
  const Ring& r = s.ring();
  AdditiveSubgroup power = s;
  uint64_t t = 1;
  while (true) {
    if (power.is_zero_group()) return t;
    std::vector<Vec> next_gens;
    for (const Vec& a : power.basis())
      for (const Vec& b : s.basis()) next_gens.push_back(r->mul(a, b));
    AdditiveSubgroup next = AdditiveSubgroup::span(r, next_gens);
    if (next == power) return std::nullopt; // stuck above zero
    power = next;
    ++t;
  }
}

NilReport nil_report_impl(const Ring& r, const AdditiveSubgroup& s) {
  NilReport rep;
  const uint64_t cap = uint64_t(1) << 16;
  require(s.order() <= cap, errc::budget_exceeded, "nil report scan too large");

  rep.is_nil = true;
  uint64_t max_exp = 0;
  for (const Vec& x : s.elements()) {
    std::optional<uint64_t> n = element_nilexponent(r, x);
    if (!n) {
      rep.is_nil = false;
      rep.nilexponent.reset();
      rep.witness.reset();
      break;
    }
    if (*n > max_exp) {
      max_exp = *n;
      rep.witness = x;
    }
  }
  if (rep.is_nil) rep.nilexponent = max_exp == 0 ? 1 : max_exp; // order-1 convention

  std::optional<uint64_t> cls = subgroup_nilpotency_class(s);
  rep.is_nilpotent = cls.has_value();
  rep.nilpotency_class = cls;

  rep.is_null = true;
  for (const Vec& a : s.basis()) {
    for (const Vec& b : s.basis())
      if (!r->is_zero(r->mul(a, b))) {
        rep.is_null = false;
        break;
      }
    if (!rep.is_null) break;
  }

  // internal consistency: null => class <= 2 => nil
  if (rep.is_null)
    require(rep.is_nilpotent && *rep.nilpotency_class <= 2, errc::internal_check_failed,
            "null ring with nilpotency class above 2");
  if (rep.is_nilpotent)
    require(rep.is_nil, errc::internal_check_failed, "nilpotent ring that is not nil");
  return rep;
}

} // namespace

NilReport nil_report(const Ring& r) { return nil_report_impl(r, AdditiveSubgroup::whole(r)); }

NilReport nil_report(const AdditiveSubgroup& s) { return nil_report_impl(s.ring(), s); }

std::optional<Vec> quasi_regular_witness(const Ring& r, const Vec& x) {
  Vec xr = r->reduce(x);
  const uint64_t cap = uint64_t(1) << 16;
  require(r->order() <= cap, errc::budget_exceeded, "quasi-regularity scan too large");
  for (uint64_t i = 0; i < r->order(); ++i) {
    Vec z = r->element_at(i);
    if (r->is_zero(r->add(r->add(xr, z), r->mul(z, xr)))) return z;
  }
  return std::nullopt;
}

AdditiveSubgroup jacobson_radical(const Ring& r) {
  r->ensure_tables();
  const uint32_t n = uint32_t(r->order());

  // left quasi-regular elements: w such that w + z + zw = 0 for some z
  std::vector<bool> quasi(n, false);
  for (uint32_t w = 0; w < n; ++w)
    for (uint32_t z = 0; z < n; ++z)
      if (r->add_idx(r->add_idx(w, z), r->mul_idx(z, w)) == 0) {
        quasi[w] = true;
        break;
      }

  std::vector<Vec> members;
  for (uint32_t x = 0; x < n; ++x) {
    bool all = true;
    for (uint32_t y = 0; y < n; ++y)
      if (!quasi[r->mul_idx(y, x)]) {
        all = false;
        break;
      }
    if (all) members.push_back(r->element_at(x));
  }

  AdditiveSubgroup j = AdditiveSubgroup::span(r, members);
  require(j.order() == members.size(), errc::internal_check_failed,
          "radical scan did not produce a subgroup");
  return j.with_kind(SubgroupKind::two_sided_ideal);
}

bool is_semisimple(const Ring& r) { return jacobson_radical(r).is_zero_group(); }

AdditiveSubgroup ideal_core(const Ring& r, const AdditiveSubgroup& left_ideal) {
  // K = { x in I : Rx, xR and RxR all land in I } is the largest two-sided
  // ideal inside the left ideal I. Integer multiples are free because I is
  // a subgroup, so the unitalized products reduce to the three listed.
  //   - any two-sided M <= I satisfies all three conditions, so M <= K;
  //   - K is itself two-sided: for k in K and r in R, rk stays in K since
  //     R(rk) <= Rk <= I, (rk)R <= r(kR) <= rI <= I, R(rk)R <= RkR <= I,
  //     and kr stays in K since R(kr) <= RkR <= I, (kr)R <= kR <= I,
  //     R(kr)R <= RkR <= I.
  std::vector<Vec> members;
  for (const Vec& x : left_ideal.elements(uint64_t(1) << 16)) {
    bool ok = true;
    for (size_t i = 0; i < r->rank() && ok; ++i) {
      Vec gx = r->mul(r->gen(i), x);
      if (!left_ideal.contains(gx) || !left_ideal.contains(r->mul(x, r->gen(i)))) {
        ok = false;
        break;
      }
      for (size_t j = 0; j < r->rank(); ++j)
        if (!left_ideal.contains(r->mul(gx, r->gen(j)))) {
          ok = false;
          break;
        }
    }
    if (ok) members.push_back(x);
  }
  AdditiveSubgroup core = AdditiveSubgroup::span(r, members);
  require(core.order() == members.size(), errc::internal_check_failed,
          "ideal core membership set is not a subgroup");
  return core.with_kind(SubgroupKind::two_sided_ideal);
}

MaximalLeftAnalysis analyze_maximal_regular_left_ideals(const Ring& r) {
  std::vector<AdditiveSubgroup> lattice = all_ideals(r, Sided::left);
  std::vector<AdditiveSubgroup> proper;
  for (const AdditiveSubgroup& h : lattice)
    if (!h.is_whole_ring()) proper.push_back(h);

  MaximalLeftAnalysis out{{}, {}, AdditiveSubgroup::whole(r), AdditiveSubgroup::whole(r)};
  for (const AdditiveSubgroup& h : proper) {
    bool maximal = true;
    for (const AdditiveSubgroup& g : proper)
      if (g.order() > h.order() && g.contains_subgroup(h)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;

    // regularity: some a works as a right identity modulo the ideal
    bool regular = false;
    for (uint64_t i = 0; i < r->order() && !regular; ++i) {
      Vec a = r->element_at(i);
      bool ok = true;
      for (size_t g = 0; g < r->rank(); ++g) {
        Vec e = r->gen(g);
        if (!h.contains(r->sub(e, r->mul(e, a)))) {
          ok = false;
          break;
        }
      }
      regular = ok;
    }
    if (!regular) continue;

    out.maximal_regular_left.push_back(h.with_kind(SubgroupKind::left_ideal));
    out.cores.push_back(ideal_core(r, h));
    out.ideal_intersection = subgroup_intersection(out.ideal_intersection, h);
    out.core_intersection = subgroup_intersection(out.core_intersection, out.cores.back());
  }
  return out;
}

AdditiveSubgroup jacobson_radical_via_maximal_ideals(const Ring& r) {
  MaximalLeftAnalysis a = analyze_maximal_regular_left_ideals(r);
  AdditiveSubgroup phi = jacobson_radical(r);
  require(a.ideal_intersection == a.core_intersection, errc::internal_check_failed,
          "intersection of maximal regular left ideals differs from core intersection");
  require(a.core_intersection == phi, errc::internal_check_failed,
          "maximal-ideal radical differs from quasi-regularity radical");
  return a.core_intersection.with_kind(SubgroupKind::two_sided_ideal);
}

AdditiveSubgroup largest_nilpotent_ideal(const Ring& r, size_t cap) {
  std::vector<AdditiveSubgroup> lattice = all_ideals(r, Sided::two, cap);
  size_t best = 0;
  std::vector<size_t> nilpotent;
  for (size_t i = 0; i < lattice.size(); ++i) {
    if (!nil_report(lattice[i]).is_nilpotent) continue;
    nilpotent.push_back(i);
    if (lattice[i].order() > lattice[best].order()) best = i;
  }
  // the sum of nilpotent ideals is nilpotent, so the maximum is unique and
  // contains all the others; verify instead of assuming
  for (size_t i : nilpotent)
    require(lattice[best].contains_subgroup(lattice[i]), errc::internal_check_failed,
            "nilpotent ideal not contained in the largest one");
  return lattice[best].with_kind(SubgroupKind::two_sided_ideal);
}

Verdict check_radical_fixed_points(const Ring& r) {
  r->ensure_tables();
  AdditiveSubgroup j = jacobson_radical(r);
  for (const Vec& x : j.elements()) {
    uint32_t xi = uint32_t(r->index_of(x));
    for (uint32_t a = 1; a < r->order(); ++a)
      if (r->add_idx(r->mul_idx(xi, a), a) == 0)
        return {false, "x = " + vec_str(x) + ", a = " + vec_str(r->element_at(a)) +
                           " satisfy xa + a = 0 with a nonzero"};
  }
  return {true, "only a = 0 solves xa + a = 0 for x in the radical"};
}

namespace {

// IrI: additive span of { a x b : a, b in I }
AdditiveSubgroup sandwich_span(const Ring& r, const AdditiveSubgroup& ideal, const Vec& x) {
  std::vector<Vec> gens;
  std::vector<Vec> bas = ideal.basis();
  for (const Vec& a : bas)
    for (const Vec& b : bas) gens.push_back(r->mul(r->mul(a, x), b));
  return AdditiveSubgroup::span(r, gens);
}

// T/U nilpotent, i.e. some power of T lands inside U. T must be closed
// under multiplication (sandwich spans are).
bool nilpotent_mod(const Ring& r, const AdditiveSubgroup& t, const AdditiveSubgroup& u) {
  AdditiveSubgroup power = t;
  while (true) {
    bool inside = true;
    for (const Vec& b : power.basis())
      if (!u.contains(b)) {
        inside = false;
        break;
      }
    if (inside) return true;
    std::vector<Vec> next_gens;
    for (const Vec& a : power.basis())
      for (const Vec& b : t.basis()) next_gens.push_back(r->mul(a, b));
    AdditiveSubgroup next = AdditiveSubgroup::span(r, next_gens);
    if (next == power) return false;
    power = next;
  }
}

} // namespace

NilpotencyTower nilpotency_tower(const Ring& r, const AdditiveSubgroup& ideal, size_t depth) {
  require(ideal.check_kind(SubgroupKind::two_sided_ideal), errc::not_two_sided_ideal,
          "tower needs a two-sided ideal");
  require(depth >= 1, errc::bad_shape, "tower depth must be at least 1");
  const uint64_t cap = uint64_t(1) << 14;
  require(r->order() <= cap, errc::budget_exceeded, "ring too large for tower scan");

  NilpotencyTower tower{r, ideal, {}};
  tower.levels.push_back(AdditiveSubgroup::zero(r));
  for (size_t i = 0; i < depth; ++i) {
    const AdditiveSubgroup& prev = tower.levels.back();
    std::vector<Vec> members;
    for (uint64_t e = 0; e < r->order(); ++e) {
      Vec x = r->element_at(e);
      AdditiveSubgroup t = sandwich_span(r, ideal, x);
      AdditiveSubgroup u = subgroup_intersection(prev, t);
      if (nilpotent_mod(r, t, u)) members.push_back(std::move(x));
    }
    AdditiveSubgroup z = AdditiveSubgroup::span(r, members);
    require(z.order() == members.size(), errc::internal_check_failed,
            "tower level is not a subgroup");
    AdditiveSubgroup level = z.with_kind(SubgroupKind::two_sided_ideal);
    require(level.contains_subgroup(prev), errc::internal_check_failed,
            "tower levels must ascend");
    tower.levels.push_back(level);
  }
  return tower;
}

Verdict check_sandwich_descent(const Ring& r, const AdditiveSubgroup& ideal, const Vec& rep,
                               size_t n) {
  require(n >= 1, errc::bad_shape, "nil exponent must be at least 1");
  std::vector<Vec> coset;
  for (const Vec& i : ideal.elements(uint64_t(1) << 14))
    coset.push_back(r->add(r->reduce(rep), i));
  for (const Vec& x : coset)
    require(r->is_zero(r->pow(x, n)), errc::precondition_failed,
            "coset element " + vec_str(x) + " does not satisfy x^n = 0");

  NilpotencyTower tower = nilpotency_tower(r, ideal, n);
  std::vector<Vec> ideal_elems = ideal.elements(uint64_t(1) << 14);
  for (size_t k = 0; k < n; ++k) {
    const AdditiveSubgroup& target = tower.level(int(k) - 1);
    for (const Vec& x : coset) {
      Vec xp = r->pow(x, n - k);
      for (const Vec& y : ideal_elems) {
        Vec prod = r->mul(r->mul(xp, y), xp);
        if (!target.contains(prod)) {
          std::ostringstream os;
          os << "k=" << k << ", x=" << vec_str(x) << ", y=" << vec_str(y)
             << ": x^(n-k) y x^(n-k) = " << vec_str(prod) << " escapes level " << (int(k) - 1);
          return {false, os.str()};
        }
      }
    }
  }
  return {true, "sandwich powers descend through all " + std::to_string(n) + " levels"};
}

Vec alternating_sandwich_product(const Ring& r, const std::vector<Vec>& tuple, const Vec& x) {
  require(!tuple.empty() && tuple.size() % 2 == 0, errc::odd_length,
          "sandwich tuple must have positive even length");
  Vec acc = r->mul(r->mul(r->reduce(tuple[0]), r->reduce(x)), r->reduce(tuple[1]));
  for (size_t t = 2; t + 1 < tuple.size(); t += 2) {
    Vec part = r->mul(r->mul(r->reduce(tuple[t]), r->reduce(x)), r->reduce(tuple[t + 1]));
    acc = r->mul(acc, part);
  }
  return acc;
}

ShadowVerdict check_low_exponent_nilpotency(const Ring& r) {
  require(r->is_commutative(), errc::precondition_failed, "ring must be commutative");
  NilReport rep = nil_report(r);
  require(rep.is_nil, errc::precondition_failed, "ring must be nil");
  int64_t c = characteristic(r);
  if (!is_prime(c))
    return {ShadowOutcome::not_applicable, "characteristic " + std::to_string(c) + " not prime"};
  if (int64_t(*rep.nilexponent) >= c)
    return {ShadowOutcome::not_applicable,
            "nilexponent " + std::to_string(*rep.nilexponent) + " not below " +
                std::to_string(c)};
  if (rep.is_nilpotent)
    return {ShadowOutcome::pass, "nil of exponent " + std::to_string(*rep.nilexponent) +
                                     " below characteristic " + std::to_string(c) +
                                     " and nilpotent of class " +
                                     std::to_string(*rep.nilpotency_class)};
  return {ShadowOutcome::counterexample, "low nilexponent but not nilpotent"};
}

} // namespace ringlab
