#ifndef RINGLAB_ACTIONS_HPP
#define RINGLAB_ACTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/bigint.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct AutGroup {
  Ring ring;
  std::vector<RingHom> elements; // canonical order, all certified bijective
  uint64_t order = 0;
  std::vector<size_t> generators; // indices into elements of a small generating set
};

AutGroup automorphism_group(const Ring& r, uint64_t node_budget = 50'000'000);

// |Aut(M_k(F_q))| = e * |GL_k(q)| / (q - 1) for q = p^e: inner
// automorphisms modulo scalars times the field automorphisms.
uint64_t matrix_aut_order(int64_t k, int64_t q);

struct ProductFactorSpec {
  int64_t k = 0;
  int64_t q = 0;
  size_t multiplicity = 1;
};

// prod_i ( kappa_i! * |Aut(M_{k_i}(F_{q_i}))|^kappa_i ). The (k, q) classes
// must be pairwise distinct; callers who split one class across entries get
// an error instead of a silent merge.
BigUint product_aut_order(const std::vector<ProductFactorSpec>& factors,
                          uint64_t node_budget = 50'000'000);

// Builds the product ring, enumerates Aut by brute force, and verifies
// every automorphism splits as (block permutation within isomorphism
// classes) composed with per-block automorphisms.
struct ProductAutCheck {
  bool pass = false;
  uint64_t aut_order = 0;
  std::string detail;
};

ProductAutCheck check_product_aut_structure(const std::vector<ProductFactorSpec>& factors,
                                            uint64_t node_budget = 50'000'000);

// Orbits of the symmetric group on m coordinates acting on n-tuples of
// R^m, i.e. on m x n arrays by row permutation. Burnside runs over cycle
// types; direct canonical enumeration cross-checks when |R|^(m n) fits the
// budget.
struct OrbitReport {
  std::string ring_name;
  uint64_t ring_order = 0;
  size_t m = 0, n = 0;
  BigUint count;
  std::string method = "burnside";
  std::optional<BigUint> enumeration_count;
};

OrbitReport orbit_count(const Ring& r, size_t m, size_t n,
                        uint64_t enumeration_budget = uint64_t(1) << 20);

// Multiset coefficient C(base + m - 1, m): the expected orbit count.
BigUint multiset_count(uint64_t base, size_t m);

struct NullCensusEntry {
  std::string name;
  bool is_null = false;
  std::optional<Vec> witness; // element whose two-sided annihilator is proper
};

struct NullCensus {
  std::vector<NullCensusEntry> entries;
  size_t non_null_count = 0;
};

NullCensus null_factor_census(const std::vector<Ring>& factors);

} // namespace ringlab

#endif
