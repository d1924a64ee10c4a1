#include "ringlab/actions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/gf.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/wedderburn.hpp"

namespace ringlab {

namespace {

// automorphism as a permutation of element indices
std::vector<uint32_t> hom_permutation(const RingHom& h) {
  const Ring& r = h.source();
  std::vector<uint32_t> perm(r->order());
  for (uint64_t i = 0; i < r->order(); ++i)
    perm[i] = uint32_t(r->index_of(h.apply(r->element_at(i))));
  return perm;
}

std::vector<uint32_t> perm_compose(const std::vector<uint32_t>& f,
                                   const std::vector<uint32_t>& g) {
  std::vector<uint32_t> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

} // namespace

AutGroup automorphism_group(const Ring& r, uint64_t node_budget) {
  AutGroup out;
  out.ring = r;
  out.elements = all_automorphisms(r, node_budget);
  out.order = out.elements.size();

  // a small generating subset, greedily: keep adding the first automorphism
  // outside the subgroup generated so far
  std::vector<std::vector<uint32_t>> perms;
  perms.reserve(out.elements.size());
  for (const RingHom& h : out.elements) perms.push_back(hom_permutation(h));

  std::set<std::vector<uint32_t>> generated;
  std::vector<std::vector<uint32_t>> frontier;
  std::vector<uint32_t> id(r->order());
  for (uint32_t i = 0; i < r->order(); ++i) id[i] = i;
  generated.insert(id);

  auto regenerate = [&](const std::vector<size_t>& gen_idx) {
    generated.clear();
    generated.insert(id);
    frontier.assign(1, id);
    while (!frontier.empty()) {
      std::vector<std::vector<uint32_t>> next;
      for (const auto& g : frontier)
        for (size_t gi : gen_idx) {
          std::vector<uint32_t> c = perm_compose(perms[gi], g);
          if (generated.insert(c).second) next.push_back(std::move(c));
        }
      frontier = std::move(next);
    }
  };

  for (size_t i = 0; i < perms.size(); ++i) {
    if (generated.count(perms[i])) continue;
    out.generators.push_back(i);
    regenerate(out.generators);
  }
  require(generated.size() == out.order, errc::internal_check_failed,
          "generating subset closure mismatch");
  return out;
}

uint64_t matrix_aut_order(int64_t k, int64_t q) {
  int64_t p, e;
  require(prime_power(q, p, e), errc::not_prime_power,
          std::to_string(q) + " is not a prime power");
  // |GL_k(q)| = prod_{i<k} (q^k - q^i)
  uint64_t gl = 1;
  uint64_t qk = 1;
  for (int64_t i = 0; i < k; ++i) qk *= uint64_t(q);
  uint64_t qi = 1;
  for (int64_t i = 0; i < k; ++i) {
    gl *= qk - qi;
    qi *= uint64_t(q);
  }
  return gl / uint64_t(q - 1) * uint64_t(e);
}

namespace {

void check_distinct_classes(const std::vector<ProductFactorSpec>& factors) {
  std::set<std::pair<int64_t, int64_t>> seen;
  for (const ProductFactorSpec& f : factors)
    require(seen.insert({f.k, f.q}).second, errc::duplicate_factor_class,
            "factor class (" + std::to_string(f.k) + "," + std::to_string(f.q) +
                ") appears in more than one entry");
}

} // namespace

BigUint product_aut_order(const std::vector<ProductFactorSpec>& factors,
                          uint64_t node_budget) {
  check_distinct_classes(factors);
  BigUint total(1);
  for (const ProductFactorSpec& f : factors) {
    uint64_t a = matrix_aut_order(f.k, f.q);
    // cross-check the closed form against brute force when the factor is
    // small enough to search
    Ring single = matrix_ring(f.k, f.q);
    if (single->order() <= 256) {
      uint64_t brute = all_automorphisms(single, node_budget).size();
      require(brute == a, errc::internal_check_failed,
              "closed-form |Aut| " + std::to_string(a) + " disagrees with search " +
                  std::to_string(brute));
    }
    BigUint part = BigUint::factorial(uint32_t(f.multiplicity));
    for (size_t i = 0; i < f.multiplicity; ++i) part = part * BigUint(a);
    total = total * part;
  }
  return total;
}

ProductAutCheck check_product_aut_structure(const std::vector<ProductFactorSpec>& factors,
                                            uint64_t node_budget) {
  check_distinct_classes(factors);
  std::vector<Ring> rings;
  std::vector<std::pair<int64_t, int64_t>> block_class;
  for (const ProductFactorSpec& f : factors)
    for (size_t i = 0; i < f.multiplicity; ++i) {
      rings.push_back(matrix_ring(f.k, f.q));
      block_class.push_back({f.k, f.q});
    }
  ProductRing prod = product(rings);
  const Ring& big = prod.ring;

  std::vector<RingHom> auts = all_automorphisms(big, node_budget);
  ProductAutCheck out;
  out.aut_order = auts.size();

  // block subgroups, as canonical keys
  std::vector<AdditiveSubgroup> block_sub;
  for (size_t b = 0; b < rings.size(); ++b)
    block_sub.push_back(prod.injections[b].image_subgroup());

  for (const RingHom& phi : auts) {
    std::vector<size_t> sigma(rings.size(), SIZE_MAX);
    for (size_t b = 0; b < rings.size(); ++b) {
      std::vector<Vec> images;
      for (const Vec& v : prod.injections[b].images()) images.push_back(phi.apply(v));
      AdditiveSubgroup img = AdditiveSubgroup::span(big, images);
      for (size_t c = 0; c < rings.size(); ++c)
        if (img == block_sub[c]) {
          sigma[b] = c;
          break;
        }
      if (sigma[b] == SIZE_MAX) {
        out.detail = "an automorphism maps a factor block off the block lattice";
        return out;
      }
      if (block_class[sigma[b]] != block_class[b]) {
        out.detail = "an automorphism permutes blocks across isomorphism classes";
        return out;
      }
    }
    // sigma must be a permutation
    std::vector<bool> hit(rings.size(), false);
    for (size_t t : sigma) {
      if (hit[t]) {
        out.detail = "block map is not a permutation";
        return out;
      }
      hit[t] = true;
    }
    // factor-wise components must certify as automorphisms of the factors
    std::vector<RingHom> comps;
    for (size_t b = 0; b < rings.size(); ++b) {
      RingHom comp =
          prod.projections[sigma[b]].compose_after(phi.compose_after(prod.injections[b]));
      if (!comp.validate().isomorphism()) {
        out.detail = "per-block component failed certification";
        return out;
      }
      comps.push_back(std::move(comp));
    }
    // reassembled map must equal phi
    for (size_t g = 0; g < big->rank(); ++g) {
      Vec expect = big->zero();
      for (size_t b = 0; b < rings.size(); ++b) {
        Vec part = comps[b].apply(prod.projections[b].apply(big->gen(g)));
        expect = big->add(expect, prod.injections[sigma[b]].apply(part));
      }
      if (expect != phi.images()[g]) {
        out.detail = "automorphism is not the permutation-composed block map";
        return out;
      }
    }
  }
  out.pass = true;
  out.detail = "all " + std::to_string(out.aut_order) +
               " automorphisms factor through block permutations";
  return out;
}

namespace {

// Burnside over cycle types: sum over partitions of m of
// (m! / prod_j (c_j! j^{c_j})) * X^{#parts}, then divide by m!.
BigUint burnside_row_orbits(uint64_t x, size_t m) {
  require(m >= 1 && m <= 48, errc::budget_exceeded, "coordinate count out of range");
  BigUint mfact = BigUint::factorial(uint32_t(m));
  BigUint total;

  // partitions of m as count vectors c[j] = number of parts of size j
  std::vector<size_t> counts(m + 1, 0);
  std::function<void(size_t, size_t)> rec = [&](size_t remaining, size_t max_part) {
    if (remaining == 0) {
      BigUint coeff = mfact;
      size_t parts = 0;
      for (size_t j = 1; j <= m; ++j) {
        for (size_t c = 1; c <= counts[j]; ++c) coeff.divexact_small(uint32_t(c));
        for (size_t c = 0; c < counts[j]; ++c) coeff.divexact_small(uint32_t(j));
        parts += counts[j];
      }
      total += coeff * BigUint::pow(x, parts);
      return;
    }
    for (size_t j = std::min(remaining, max_part); j >= 1; --j) {
      counts[j]++;
      rec(remaining - j, j);
      counts[j]--;
    }
  };
  rec(m, m);

  for (uint32_t d = 2; d <= m; ++d) total.divexact_small(d);
  return total;
}

} // namespace

BigUint multiset_count(uint64_t base, size_t m) {
  BigUint acc(1);
  for (size_t i = 1; i <= m; ++i) {
    acc = acc * (BigUint(base) + BigUint(uint64_t(i) - 1));
    acc.divexact_small(uint32_t(i));
  }
  return acc;
}

OrbitReport orbit_count(const Ring& r, size_t m, size_t n, uint64_t enumeration_budget) {
  require(m >= 1 && n >= 1, errc::bad_shape, "tuple sizes must be positive");
  OrbitReport rep;
  rep.ring_name = r->name();
  rep.ring_order = r->order();
  rep.m = m;
  rep.n = n;

  // X = |R|^n = number of possible rows
  uint64_t x = 1;
  for (size_t i = 0; i < n; ++i) {
    require(x <= UINT64_MAX / r->order(), errc::budget_exceeded, "row alphabet overflows");
    x *= r->order();
  }
  rep.count = burnside_row_orbits(x, m);
  rep.method = "burnside";

  // canonical enumeration when the full array space fits the budget
  double total = 1;
  for (size_t i = 0; i < m; ++i) total *= double(x);
  if (total <= double(enumeration_budget)) {
    std::set<std::vector<uint64_t>> orbits;
    std::vector<uint64_t> rows(m, 0);
    while (true) {
      std::vector<uint64_t> key = rows;
      std::sort(key.begin(), key.end());
      orbits.insert(std::move(key));
      size_t pos = 0;
      while (pos < m && ++rows[pos] == x) rows[pos++] = 0;
      if (pos == m) break;
    }
    rep.enumeration_count = BigUint(orbits.size());
    require(*rep.enumeration_count == rep.count, errc::internal_check_failed,
            "cycle-type count disagrees with direct enumeration");
  }
  return rep;
}

NullCensus null_factor_census(const std::vector<Ring>& factors) {
  NullCensus out;
  for (const Ring& f : factors) {
    NullCensusEntry entry;
    entry.name = f->name();
    NilReport rep = nil_report(f);
    entry.is_null = rep.is_null;
    if (!rep.is_null) {
      out.non_null_count++;
      for (uint64_t i = 0; i < f->order(); ++i) {
        Vec s = f->element_at(i);
        if (annihilator(f, s).order() < f->order()) {
          entry.witness = s;
          break;
        }
      }
      require(entry.witness.has_value(), errc::internal_check_failed,
              "non-null factor without a proper annihilator witness");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

} // namespace ringlab
