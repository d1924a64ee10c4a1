#include "ringlab/profinite.hpp"

#include <algorithm>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"

namespace ringlab {

namespace {

// basis monomials of free_nil(p, n): nonzero exponent vectors with entries
// below p, sorted by total degree then lexicographically
std::vector<std::vector<int64_t>> monomial_basis(int64_t p, size_t n) {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> exp(n, 0);
  while (true) {
    size_t pos = 0;
    while (pos < n && ++exp[pos] == p) exp[pos++] = 0;
    if (pos == n) break;
    out.push_back(exp);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int64_t da = 0, db = 0;
    for (int64_t x : a) da += x;
    for (int64_t x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

} // namespace

size_t free_nil_monomial_index(int64_t p, size_t n, const std::vector<int64_t>& exponents) {
  std::vector<std::vector<int64_t>> basis = monomial_basis(p, n);
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == exponents) return i;
  fail(errc::bad_shape, "exponent vector is not a basis monomial");
}

Ring free_nil_ring(int64_t p, size_t n) {
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
  require(n >= 1, errc::bad_shape, "need at least one generator");
  std::vector<std::vector<int64_t>> basis = monomial_basis(p, n);
  const size_t r = basis.size();
  require(r <= 64, errc::budget_exceeded, "free nil level too large to present");

  std::map<std::vector<int64_t>, size_t> index;
  for (size_t i = 0; i < r; ++i) index[basis[i]] = i;

  Vec moduli(r, p);
  std::vector<Mat> sc(r, Mat(r, Vec(r, 0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      std::vector<int64_t> sum(n);
      bool dies = false;
      for (size_t t = 0; t < n; ++t) {
        sum[t] = basis[i][t] + basis[j][t];
        if (sum[t] >= p) dies = true; // x_t^p = 0 kills the monomial
      }
      if (!dies) sc[i][j][index.at(sum)] = 1;
    }

  std::ostringstream name;
  name << "freenil(p=" << p << ",n=" << n << ")";
  return FiniteRing::make(std::move(moduli), std::move(sc), name.str());
}

InverseSystem free_nil_system(int64_t p, size_t top) {
  require(top >= 1, errc::bad_shape, "tower height must be at least 1");
  InverseSystem sys;
  for (size_t n = 1; n <= top; ++n) sys.levels.push_back(free_nil_ring(p, n));
  for (size_t n = 1; n < top; ++n) {
    const Ring& big = sys.levels[n];      // n+1 generators
    const Ring& small = sys.levels[n - 1]; // n generators
    std::vector<std::vector<int64_t>> big_basis = monomial_basis(p, n + 1);
    std::vector<Vec> images;
    for (const std::vector<int64_t>& exp : big_basis) {
      if (exp[n] != 0) {
        images.push_back(small->zero()); // involves the killed generator
      } else {
        std::vector<int64_t> trunc(exp.begin(), exp.end() - 1);
        images.push_back(small->gen(free_nil_monomial_index(p, n, trunc)));
      }
    }
    sys.maps.emplace_back(big, small, std::move(images));
  }
  return sys;
}

Verdict check_system(const InverseSystem& sys, bool check_nil_profile) {
  require(sys.maps.size() + 1 == sys.levels.size() || (sys.levels.size() <= 1 && sys.maps.empty()),
          errc::bad_shape, "level/map count mismatch");
  for (size_t i = 0; i < sys.maps.size(); ++i) {
    const RingHom& f = sys.maps[i];
    if (f.source().get() != sys.levels[i + 1].get() || f.target().get() != sys.levels[i].get())
      return {false, "map " + std::to_string(i) + " does not connect adjacent levels"};
    HomFlags flags = f.validate();
    if (!flags.homomorphism())
      return {false, "map " + std::to_string(i) + " is not a ring homomorphism"};
    if (!flags.surjective) return {false, "map " + std::to_string(i) + " is not surjective"};
  }
  if (check_nil_profile) {
    std::optional<uint64_t> expo;
    uint64_t prev_class = 0;
    for (size_t i = 0; i < sys.levels.size(); ++i) {
      NilReport rep = nil_report(sys.levels[i]);
      if (!rep.is_nil || !rep.is_nilpotent)
        return {false, "level " + std::to_string(i) + " is not nilpotent"};
      if (expo && *rep.nilexponent != *expo)
        return {false, "nilexponent changed along the tower"};
      expo = rep.nilexponent;
      if (i > 0 && *rep.nilpotency_class <= prev_class)
        return {false, "nilpotency class failed to increase at level " + std::to_string(i)};
      prev_class = *rep.nilpotency_class;
    }
  }
  return {true, "all connecting maps are surjective homomorphisms"};
}

Verdict reduced_poly_nonvanishing(int64_t p, size_t n, const Polynomial& f) {
  require(is_prime(p), errc::not_prime, std::to_string(p) + " is not prime");
  Polynomial reduced;
  for (const auto& [exp, coeff] : f) {
    require(exp.size() == n, errc::bad_shape, "exponent vector arity mismatch");
    int64_t c = mod_floor(coeff, p);
    if (c == 0) continue;
    bool constant = true;
    for (int64_t d : exp) {
      require(d >= 0 && d < p, errc::bad_degree, "partial degree must be below p");
      if (d != 0) constant = false;
    }
    require(!constant, errc::constant_term,
            "polynomial has a constant term; the ring has no unit to absorb it");
    reduced[exp] = c;
  }
  require(!reduced.empty(), errc::zero_polynomial, "polynomial is zero mod p");

  Ring r = free_nil_ring(p, n);
  Vec acc = r->zero();
  for (const auto& [exp, coeff] : reduced) {
    // evaluate the monomial at the generators, honestly, by ring products
    Vec mono;
    bool first = true;
    for (size_t v = 0; v < n; ++v) {
      std::vector<int64_t> unit_exp(n, 0);
      unit_exp[v] = 1;
      Vec xv = r->gen(free_nil_monomial_index(p, n, unit_exp));
      for (int64_t t = 0; t < exp[v]; ++t) {
        mono = first ? xv : r->mul(mono, xv);
        first = false;
      }
    }
    acc = r->add(acc, r->scale(coeff, mono));
  }
  if (r->is_zero(acc)) return {false, "nonzero reduced polynomial evaluated to zero"};
  return {true, "value is nonzero at the free generators"};
}

TowerProfile tower_nil_profile(int64_t p, size_t top) {
  require(top >= 1, errc::bad_shape, "tower height must be at least 1");
  TowerProfile profile;
  profile.p = p;
  InverseSystem sys = free_nil_system(p, top);
  Verdict v = check_system(sys, true);
  require(v.pass, errc::internal_check_failed, "free nil tower failed its own checks: " + v.detail);

  for (size_t i = 0; i < sys.levels.size(); ++i) {
    const Ring& r = sys.levels[i];
    const uint64_t cap = uint64_t(1) << 16;
    require(r->order() <= cap, errc::budget_exceeded, "tower level too large to profile");
    NilReport rep = nil_report(r);
    TowerProfileRow row;
    row.level = i + 1;
    row.order = r->order();
    row.nilexponent = *rep.nilexponent;
    row.nilpotency_class = *rep.nilpotency_class;

    // explicit quasi-regularity witness z = -x + x^2 - x^3 + ... for each
    // element; x^p = 0 makes the sum finite
    row.radical_is_whole = true;
    for (uint64_t e = 0; e < r->order() && row.radical_is_whole; ++e) {
      Vec x = r->element_at(e);
      Vec z = r->zero();
      Vec powx = x;
      int64_t sign = -1;
      for (int64_t t = 1; t < p; ++t) {
        z = r->add(z, r->scale(sign, powx));
        powx = r->mul(powx, x);
        sign = -sign;
      }
      Vec probe = r->add(r->add(x, z), r->mul(z, x));
      if (!r->is_zero(probe)) row.radical_is_whole = false;
    }
    profile.rows.push_back(row);
  }
  return profile;
}

} // namespace ringlab
