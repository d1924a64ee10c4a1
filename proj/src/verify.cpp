#include "ringlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "ringlab/actions.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/profinite.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/wedderburn.hpp"

namespace ringlab {

namespace {

struct splitmix64 {
  uint64_t state;
  explicit splitmix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

class SuiteBuilder {
public:
  explicit SuiteBuilder(std::string name) { rep_.suite = std::move(name); }

  void run(const std::string& id, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CaseResult c;
    c.id = id;
    try {
      c.witness = body();
      c.verdict = "pass";
    } catch (const std::exception& e) {
      c.verdict = "fail";
      c.witness = e.what();
    }
    c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count();
    rep_.cases.push_back(std::move(c));
  }

  void skip(const std::string& id, const std::string& why) {
    rep_.cases.push_back({id, "skip", why, 0});
  }

  VerificationReport finish() {
    std::sort(rep_.cases.begin(), rep_.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    rep_.passed = rep_.failed = rep_.skipped = 0;
    for (const CaseResult& c : rep_.cases) {
      if (c.verdict == "pass") rep_.passed++;
      else if (c.verdict == "fail") rep_.failed++;
      else rep_.skipped++;
    }
    return rep_;
  }

private:
  VerificationReport rep_;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw RingError(errc::internal_check_failed, what);
}

std::string subgroup_str(const AdditiveSubgroup& s) {
  std::ostringstream os;
  os << "order " << s.order();
  return os.str();
}

// ---- suite 1: radical agreement ------------------------------------------

VerificationReport suite_radical_agreement(uint64_t) {
  SuiteBuilder b("radical-agreement");
  for (const auto& entry : corpus::curated()) {
    b.run(entry.id, [&] {
      const Ring& r = entry.ring;
      AdditiveSubgroup phi = jacobson_radical(r);
      MaximalLeftAnalysis ana = analyze_maximal_regular_left_ideals(r);
      expect(ana.ideal_intersection == phi,
             "intersection of maximal regular left ideals != quasi-regularity radical");
      expect(ana.core_intersection == phi, "core intersection != quasi-regularity radical");
      std::string note = "J " + subgroup_str(phi) + ", " +
                         std::to_string(ana.maximal_regular_left.size()) + " maximal ideals";
      if (r->order() <= 64) {
        AdditiveSubgroup nil = largest_nilpotent_ideal(r);
        expect(nil == phi, "largest nilpotent ideal != radical");
        note += ", nilpotent-ideal search agrees";
      }
      return note;
    });
  }
  return b.finish();
}

// ---- suite 2: semisimple decomposition roundtrip --------------------------

std::vector<DecompositionFactor> random_factor_list(splitmix64& rng, uint64_t max_order) {
  static const std::vector<std::pair<int64_t, int64_t>> pool = {
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7}, {1, 8}, {1, 9},
      {1, 11}, {1, 13}, {1, 16}, {2, 2}, {2, 3}, {2, 4}, {3, 2}};
  auto order_of = [](std::pair<int64_t, int64_t> f) {
    uint64_t o = 1;
    for (int64_t i = 0; i < f.first * f.first; ++i) o *= uint64_t(f.second);
    return o;
  };
  std::vector<std::pair<int64_t, int64_t>> picked;
  uint64_t budget = max_order;
  while (true) {
    std::vector<std::pair<int64_t, int64_t>> feasible;
    for (auto f : pool)
      if (order_of(f) <= budget) feasible.push_back(f);
    if (feasible.empty()) break;
    auto f = feasible[rng.below(feasible.size())];
    picked.push_back(f);
    budget /= order_of(f);
    if (!picked.empty() && rng.below(100) < 30) break;
  }
  if (picked.empty()) picked.push_back({1, 2});
  std::sort(picked.begin(), picked.end(),
            [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
  std::vector<DecompositionFactor> out;
  for (auto f : picked) {
    if (!out.empty() && out.back().k == f.first && out.back().q == f.second)
      out.back().multiplicity++;
    else
      out.push_back({f.first, f.second, 1});
  }
  return out;
}

VerificationReport suite_wedderburn_roundtrip(uint64_t seed) {
  SuiteBuilder b("wedderburn-roundtrip");
  splitmix64 rng(seed == 0 ? 1 : seed);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<DecompositionFactor> want = random_factor_list(rng, 512);
    std::ostringstream id;
    id << "roundtrip-" << (trial < 10 ? "0" : "") << trial;
    b.run(id.str(), [&] {
      Ring r = rebuild(want);
      Decomposition d = decompose_semisimple(r);
      expect(d.factors == want, "decomposed " + factors_to_string(d.factors) +
                                    " but built " + factors_to_string(want));
      return factors_to_string(want) + ", order " + std::to_string(r->order());
    });
  }
  for (const auto& entry : corpus::curated()) {
    if (jacobson_radical(entry.ring).is_zero_group()) continue;
    b.run("reject-" + entry.id, [&] {
      try {
        decompose_semisimple(entry.ring);
      } catch (const RingError& e) {
        expect(e.code() == errc::not_semisimple, "wrong error kind");
        return std::string("rejected: ") + e.what();
      }
      throw RingError(errc::internal_check_failed, "radical ring was decomposed");
    });
  }
  return b.finish();
}

// ---- suite 3: free nil towers ---------------------------------------------

VerificationReport suite_freenil_towers(uint64_t) {
  SuiteBuilder b("freenil-towers");
  const std::vector<std::pair<int64_t, size_t>> towers = {{2, 4}, {3, 2}};
  for (auto [p, top] : towers) {
    std::ostringstream id;
    id << "tower-p" << p << "-N" << top;
    b.run(id.str(), [p = p, top = top] {
      TowerProfile prof = tower_nil_profile(p, top);
      std::ostringstream note;
      uint64_t prev_class = 0;
      for (const TowerProfileRow& row : prof.rows) {
        expect(row.nilexponent == uint64_t(p),
               "level " + std::to_string(row.level) + " nilexponent != p");
        uint64_t expected_class = row.level * uint64_t(p - 1) + 1;
        expect(row.nilpotency_class == expected_class,
               "level " + std::to_string(row.level) + " class " +
                   std::to_string(row.nilpotency_class) + " != " +
                   std::to_string(expected_class));
        expect(row.nilpotency_class > prev_class, "class not strictly increasing");
        expect(row.radical_is_whole, "radical is not the whole ring");
        prev_class = row.nilpotency_class;
        note << " n=" << row.level << ":exp=" << row.nilexponent
             << ",class=" << row.nilpotency_class;
      }
      return "uniform nilexponent, unbounded class:" + note.str();
    });
  }
  return b.finish();
}

// ---- suite 4: automorphisms of products -----------------------------------

VerificationReport suite_aut_products(uint64_t) {
  SuiteBuilder b("aut-products");
  struct Case {
    std::string id;
    std::vector<ProductFactorSpec> factors;
    uint64_t expect_order;
  };
  const std::vector<Case> cases = {
      {"f2xf2", {{1, 2, 2}}, 2},
      {"z6-shape", {{1, 2, 1}, {1, 3, 1}}, 1},
      {"m2f2", {{2, 2, 1}}, 6},
      {"m2f2-squared", {{2, 2, 2}}, 72},
      {"f4-squared", {{1, 4, 2}}, 8},
  };
  for (const Case& c : cases) {
    b.run(c.id, [&] {
      BigUint predicted = product_aut_order(c.factors);
      expect(predicted == BigUint(c.expect_order),
             "closed-form order " + predicted.str() + " != expected " +
                 std::to_string(c.expect_order));
      ProductAutCheck chk = check_product_aut_structure(c.factors);
      expect(chk.pass, chk.detail);
      expect(chk.aut_order == c.expect_order,
             "brute-force order " + std::to_string(chk.aut_order) + " != expected " +
                 std::to_string(c.expect_order));
      return "|Aut| = " + std::to_string(chk.aut_order) + "; " + chk.detail;
    });
  }
  return b.finish();
}

// ---- suite 5: polynomial bounds -------------------------------------------

// independent degree oracle: multiply the factors out in Z[x]
uint64_t symbolic_degree(size_t m) {
  std::vector<long long> poly{1};
  for (size_t i = 1; i < m; ++i)
    for (size_t j = i + 1; j <= m; ++j) {
      std::vector<long long> factor(j + 1, 0);
      factor[i] = 1;
      factor[j] = -1;
      std::vector<long long> next(poly.size() + factor.size() - 1, 0);
      for (size_t a = 0; a < poly.size(); ++a)
        for (size_t c = 0; c < factor.size(); ++c) next[a + c] += poly[a] * factor[c];
      poly = std::move(next);
    }
  size_t d = poly.size();
  while (d > 0 && poly[d - 1] == 0) --d;
  return d == 0 ? 0 : uint64_t(d - 1);
}

VerificationReport suite_poly_bounds(uint64_t) {
  SuiteBuilder b("poly-bounds");
  b.run("degree-formula", [] {
    for (size_t m = 2; m <= 6; ++m) {
      uint64_t closed = 0;
      for (uint64_t j = 2; j <= m; ++j) closed += j * (j - 1);
      expect(power_difference_degree(m) == closed, "degree != sum j(j-1) at m=" + std::to_string(m));
      expect(power_difference_degree(m) == symbolic_degree(m),
             "degree != symbolic expansion at m=" + std::to_string(m));
    }
    return std::string("degrees match the closed form and the symbolic expansion, m <= 6");
  });
  b.run("vanishing-respects-bounds", [] {
    std::ostringstream note;
    for (int64_t q : {2, 3})
      for (int64_t k : {1, 2}) {
        Ring mk = matrix_ring(k, q);
        for (size_t m = 2; m <= 6; ++m) {
          if (!power_difference_vanishes_everywhere(mk, m)) continue;
          uint64_t cubic = uint64_t(m) * (m - 1) * (m + 1) / 6;
          expect(uint64_t(k) <= cubic, "vanishing outside the k bound");
          expect(uint64_t(q) <= power_difference_degree(m), "vanishing outside the field bound");
          expect(power_difference_vanishes_everywhere(matrix_ring(1, q), m),
                 "matrix vanishing without scalar vanishing");
          note << " (m=" << m << ",k=" << k << ",q=" << q << ")";
        }
      }
    return "vanishing cases all within bounds:" + note.str();
  });
  b.run("jordan-witness", [] {
    size_t checked = 0;
    for (size_t m = 2; m <= 3; ++m) {
      uint64_t cubic = uint64_t(m) * (m - 1) * (m + 1) / 6;
      for (size_t k = 1; k <= 6; ++k) {
        if (k > cubic) {
          expect(jordan_witness_nonzero(m, k, 2),
                 "jordan witness vanished above the bound at m=" + std::to_string(m) +
                     ", k=" + std::to_string(k));
          ++checked;
        }
      }
    }
    return std::to_string(checked) + " above-bound witnesses all nonzero";
  });
  return b.finish();
}

// ---- suite 6: radical fixed points and nil radicals ------------------------

VerificationReport suite_radical_nil(uint64_t) {
  SuiteBuilder b("radical-nil");
  for (const auto& entry : corpus::curated()) {
    if (entry.ring->order() > 128) continue;
    b.run(entry.id, [&] {
      Verdict v = check_radical_fixed_points(entry.ring);
      expect(v.pass, v.detail);
      NilReport rep = nil_report(jacobson_radical(entry.ring));
      expect(rep.is_nil, "radical is not nil");
      return "fixed points trivial; J nil of exponent " +
             std::to_string(*rep.nilexponent);
    });
  }
  return b.finish();
}

// ---- suite 7: tower descent ------------------------------------------------

VerificationReport suite_tower_descent(uint64_t) {
  SuiteBuilder b("tower-descent");
  for (const auto& entry : corpus::curated()) {
    if (entry.ring->order() > 81) continue;
    NilReport rep = nil_report(entry.ring);
    if (!rep.is_nil) continue;
    b.run(entry.id, [&, rep] {
      const Ring& r = entry.ring;
      AdditiveSubgroup whole = AdditiveSubgroup::whole(r);
      size_t n = size_t(*rep.nilexponent);
      Verdict v = check_sandwich_descent(r, whole, r->zero(), n);
      expect(v.pass, v.detail);
      std::string note = "descent ok at n=" + std::to_string(n);
      if (rep.is_nilpotent) {
        NilpotencyTower tower = nilpotency_tower(r, whole, 1);
        expect(tower.level(0).is_whole_ring(), "level 0 short of the whole nilpotent ring");
        note += "; level 0 is everything";
      }
      return note;
    });
  }
  return b.finish();
}

// ---- suite 8: orbit counts --------------------------------------------------

VerificationReport suite_orbits(uint64_t) {
  SuiteBuilder b("orbits");
  std::vector<Ring> small = {corpus::zero_ring(), corpus::zn(2), corpus::zn(3), corpus::zn(4)};
  for (const Ring& r : small)
    for (size_t m = 1; m <= 4; ++m)
      for (size_t n = 1; n <= 2; ++n) {
        std::ostringstream id;
        id << "grid-o" << r->order() << "-m" << m << "-n" << n;
        b.run(id.str(), [&, m, n] {
          OrbitReport rep = orbit_count(r, m, n);
          expect(rep.enumeration_count.has_value(), "enumeration skipped inside the grid");
          uint64_t x = 1;
          for (size_t i = 0; i < n; ++i) x *= r->order();
          expect(rep.count == multiset_count(x, m), "count != multiset formula");
          if (m == 1) expect(rep.count == BigUint(x), "m=1 must give |R|^n orbits");
          return "orbits = " + rep.count.str();
        });
      }
  b.run("f2-m3-n1", [] {
    OrbitReport rep = orbit_count(corpus::zn(2), 3, 1);
    expect(rep.count == BigUint(4), "expected 4 orbits");
    return std::string("orbits = 4");
  });
  return b.finish();
}

// ---- suite 9: polynomial evaluation at free generators ----------------------

VerificationReport suite_free_evaluation(uint64_t) {
  SuiteBuilder b("free-evaluation");
  const std::vector<std::pair<int64_t, size_t>> grids = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  for (auto [p, n] : grids) {
    std::ostringstream id;
    id << "all-reduced-p" << p << "-n" << n;
    b.run(id.str(), [p = p, n = n] {
      // every nonzero constant-free polynomial with partial degrees < p:
      // one coefficient in [0,p) per nonconstant reduced monomial
      std::vector<std::vector<int64_t>> monomials;
      std::vector<int64_t> exp(n, 0);
      while (true) {
        size_t pos = 0;
        while (pos < n && ++exp[pos] == p) exp[pos++] = 0;
        if (pos == n) break;
        monomials.push_back(exp);
      }
      uint64_t total = 1;
      for (size_t i = 0; i < monomials.size(); ++i) total *= uint64_t(p);
      size_t checked = 0;
      for (uint64_t code = 1; code < total; ++code) {
        Polynomial f;
        uint64_t c = code;
        for (const auto& mono : monomials) {
          int64_t coeff = int64_t(c % uint64_t(p));
          c /= uint64_t(p);
          if (coeff != 0) f[mono] = coeff;
        }
        Verdict v = reduced_poly_nonvanishing(p, n, f);
        expect(v.pass, "vanishing polynomial found: " + v.detail);
        ++checked;
      }
      return std::to_string(checked) + " polynomials all nonzero at the generators";
    });
  }
  return b.finish();
}

// ---- suite 10: unitalization -------------------------------------------------

VerificationReport suite_unitalization(uint64_t) {
  SuiteBuilder b("unitalization");
  for (const auto& entry : corpus::curated()) {
    if (entry.ring->is_unital()) continue;
    b.run(entry.id, [&] {
      const Ring& r = entry.ring;
      int64_t c = characteristic(r);
      Unitalization u = unitalize(r, c);
      expect(u.ring->is_unital(), "unitalization has no unit");
      expect(u.ring->unit() == u.unit, "unit is not the adjoined generator");
      expect(u.ring->order() == r->order() * uint64_t(c), "order != |R| * c");
      HomFlags flags = u.embed.validate();
      expect(flags.homomorphism() && flags.injective, "embedding not certified");
      AdditiveSubgroup img = u.embed.image_subgroup();
      expect(img.check_kind(SubgroupKind::two_sided_ideal), "image is not a two-sided ideal");
      expect(u.ring->order() / img.order() == uint64_t(c), "index of the image != c");
      return "R^1 order " + std::to_string(u.ring->order()) + ", index " + std::to_string(c);
    });
  }
  return b.finish();
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "radical-agreement", "wedderburn-roundtrip", "freenil-towers", "aut-products",
      "poly-bounds",       "radical-nil",          "tower-descent",  "orbits",
      "free-evaluation",   "unitalization"};
  return names;
}

VerificationReport run_verify_suite(const std::string& name, uint64_t seed) {
  if (name == "radical-agreement") return suite_radical_agreement(seed);
  if (name == "wedderburn-roundtrip") return suite_wedderburn_roundtrip(seed);
  if (name == "freenil-towers") return suite_freenil_towers(seed);
  if (name == "aut-products") return suite_aut_products(seed);
  if (name == "poly-bounds") return suite_poly_bounds(seed);
  if (name == "radical-nil") return suite_radical_nil(seed);
  if (name == "tower-descent") return suite_tower_descent(seed);
  if (name == "orbits") return suite_orbits(seed);
  if (name == "free-evaluation") return suite_free_evaluation(seed);
  if (name == "unitalization") return suite_unitalization(seed);
  fail(errc::parse_error, "unknown suite '" + name + "'");
}

std::string report_text(const VerificationReport& rep, bool timings) {
  std::ostringstream os;
  os << "suite " << rep.suite << "\n";
  for (const CaseResult& c : rep.cases) {
    os << "  [" << c.verdict << "] " << c.id;
    if (!c.witness.empty()) os << " -- " << c.witness;
    if (timings) os << " (" << c.ms << " ms)";
    os << "\n";
  }
  os << "summary: " << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped
     << " skipped\n";
  return os.str();
}

std::string report_json(const VerificationReport& rep, bool timings) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["cases"] = nlohmann::json::array();
  for (const CaseResult& c : rep.cases) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["verdict"] = c.verdict;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    jc["ms"] = timings ? c.ms : 0;
    j["cases"].push_back(std::move(jc));
  }
  j["summary"] = {{"passed", rep.passed}, {"failed", rep.failed}, {"skipped", rep.skipped}};
  return j.dump(2) + "\n";
}

} // namespace ringlab
