#ifndef RINGLAB_LINALG_HPP
#define RINGLAB_LINALG_HPP

#include <cstdint>
#include <vector>

namespace ringlab {

using Vec = std::vector<int64_t>;
using Mat = std::vector<Vec>;

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
int64_t exgcd64(int64_t a, int64_t b, int64_t& x, int64_t& y);
int64_t mod_floor(int64_t a, int64_t m); // representative in [0, m)

// Hermite normal form of the lattice spanned by the given rows together
// with the rows d_i * e_i (so the lattice always has full rank r and the
// result is a square upper-triangular matrix, one pivot per column, with
// entries above each pivot reduced into [0, pivot)). This is the canonical
// presentation used for subgroups of prod Z/d_i: two generating sets span
// the same subgroup iff they produce the same matrix.
Mat hnf_with_moduli(const Mat& rows, const Vec& moduli);

// v (length r, arbitrary integers) lies in the lattice spanned by the HNF
// rows iff forward elimination reduces it to zero.
bool hnf_lattice_contains(const Mat& hnf, const Vec& v);

// Smith normal form restricted to what the quotient construction needs:
// for a full-rank square lattice matrix A (columns generate the lattice),
// computes diagonal d and a unimodular U with its inverse such that
// U*A*V = diag(d) for some unimodular V (V is not returned). Then
// x |-> U*x induces an isomorphism Z^r / colspan(A) -> prod Z/d_i.
struct SmithU {
  Vec diag;
  Mat u;     // row-major r x r
  Mat u_inv; // exact integer inverse of u
};
SmithU smith_left_transform(Mat a);

Vec mat_apply(const Mat& m, const Vec& v); // m * v, v as column

} // namespace ringlab

#endif
