#ifndef RINGLAB_WEDDERBURN_HPP
#define RINGLAB_WEDDERBURN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// M_k(F_q) as a structure-constant ring. Additive generators are indexed
// by (row a, col b, field-basis power t): index = (a*k + b)*e + t, where
// q = p^e; the generator is the matrix unit E_ab times x^t for the fixed
// field presentation of gf.hpp. All moduli equal p; the ring is unital of
// order q^(k^2).
Ring matrix_ring(int64_t k, int64_t q);

struct DecompositionFactor {
  int64_t k = 0;
  int64_t q = 0;
  size_t multiplicity = 0;
  bool operator==(const DecompositionFactor&) const = default;
};

struct Decomposition {
  std::vector<DecompositionFactor> factors; // sorted by (q, k)
  Ring rebuilt;                             // the product in canonical order
  RingHom iso;                              // source -> rebuilt, certified bijective hom
};

struct SimpleQuotient {
  AdditiveSubgroup maximal_ideal;
  Ring ring; // R / maximal_ideal
  RingHom proj;
};

// The distinct maximal two-sided ideals of a unital ring with their simple
// quotients, found through the semisimple part R/J(R).
std::vector<SimpleQuotient> maximal_two_sided_quotients(const Ring& r);

struct MatrixRecognition {
  int64_t k = 0;
  int64_t q = 0;
  RingHom iso; // source -> matrix_ring(k, q), certified
};

// Identifies a finite simple unital ring as a full matrix ring over a
// finite field: finds a minimal left ideal L, computes the endomorphism
// field as the commutant of the left action on L (its field structure is
// verified, not assumed), and assembles the isomorphism from the matrix
// of the action in a basis of L over that field.
MatrixRecognition recognize_matrix_ring(const Ring& s);

Decomposition decompose_semisimple(const Ring& r);

// Decomposition through the unitalization for rings presented without a
// unit: decompose R^1 and keep the factors supporting the image of R.
Decomposition decompose_via_unitalization(const Ring& r);

Ring rebuild(const std::vector<DecompositionFactor>& factors);

std::string factors_to_string(const std::vector<DecompositionFactor>& factors);

// prod over 0<i<j<=m of (x^i - x^j), evaluated in x's ring.
Vec power_difference_eval(const Ring& r, size_t m, const Vec& x);
uint64_t power_difference_degree(size_t m); // sum of max(i,j) over the index set

// True when the polynomial above vanishes at every element of the ring.
bool power_difference_vanishes_everywhere(const Ring& r, size_t m);

// The two size bounds tied to an ideal of index s and a vanishing
// power-difference polynomial of parameter m:
//   k_bound = max( floor(sqrt(floor(log2 s))), m(m-1)(m+1)/6 )
//   f_bound = max( s, deg w_m )
// The square root is taken with the floor convention; the underlying
// inequality is real-valued, so callers should avoid cases that straddle
// the rounding.
struct BoundReport {
  size_t m = 0;
  uint64_t s = 0;
  uint64_t k_bound = 0;
  uint64_t f_bound = 0;
  uint64_t w_degree = 0;
};

BoundReport size_bounds(size_t m, uint64_t s);

// Evaluates the power-difference product at the k x k nilpotent Jordan
// block over F_q; true when the value is nonzero. Probes sharpness of the
// k bound without materializing the full matrix ring.
bool jordan_witness_nonzero(size_t m, size_t k, int64_t q);

} // namespace ringlab

#endif
