#ifndef RINGLAB_PROFINITE_HPP
#define RINGLAB_PROFINITE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringlab/radical.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Finite tower of rings with surjective connecting homomorphisms; level 0
// is the smallest quotient.
struct InverseSystem {
  std::vector<Ring> levels;
  std::vector<RingHom> maps; // maps[i] : levels[i+1] ->> levels[i]
};

// The commutative F_p-algebra without unit on n generators subject to
// x_i^p = 0. Basis: monomials with all exponents below p and degree at
// least one, ordered by degree then lexicographically; dimension p^n - 1.
Ring free_nil_ring(int64_t p, size_t n);

// Index of a monomial (given by its exponent vector) in the basis order of
// free_nil_ring(p, n).
size_t free_nil_monomial_index(int64_t p, size_t n, const std::vector<int64_t>& exponents);

// Tower free_nil(p,1) <<- free_nil(p,2) <<- ... <<- free_nil(p,top); each
// connecting map kills the last generator and fixes the others.
InverseSystem free_nil_system(int64_t p, size_t top);

// Certifies every connecting map (homomorphism + surjectivity). When
// `check_nil_profile` is set, additionally requires the nilexponent to be
// constant along the tower and the nilpotency class strictly increasing.
Verdict check_system(const InverseSystem& sys, bool check_nil_profile = false);

// Sparse polynomial over F_p: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int64_t>, int64_t>;

// Evaluates f at the free generators of free_nil(p, n) and reports whether
// the value is nonzero. f must be nonzero, constant-free, with every
// partial degree below p.
Verdict reduced_poly_nonvanishing(int64_t p, size_t n, const Polynomial& f);

// Per-level nil profile of the free nil tower: nilexponent stays at p
// while the nilpotency class n(p-1)+1 grows without bound. The radical is
// verified to be the whole ring by explicit quasi-regularity witnesses
// z = -x + x^2 - ... (every element of a nil ring is quasi-regular, and a
// ring all of whose elements are quasi-regular is its own radical).
struct TowerProfileRow {
  size_t level = 0; // number of generators
  uint64_t order = 0;
  uint64_t nilexponent = 0;
  uint64_t nilpotency_class = 0;
  bool radical_is_whole = false;
};

struct TowerProfile {
  int64_t p = 0;
  std::vector<TowerProfileRow> rows;
};

TowerProfile tower_nil_profile(int64_t p, size_t top);

} // namespace ringlab

#endif
