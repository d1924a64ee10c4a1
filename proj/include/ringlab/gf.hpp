#ifndef RINGLAB_GF_HPP
#define RINGLAB_GF_HPP

#include <cstdint>
#include <vector>

namespace ringlab {

bool is_prime(int64_t n);
// Decomposes q = p^e with p prime; returns false if q is not a prime power.
bool prime_power(int64_t q, int64_t& p, int64_t& e);

// Arithmetic in GF(p^e), elements encoded as base-p digit strings read as
// polynomials in the class of x modulo a fixed irreducible: the
// lexicographically smallest monic irreducible of degree e over F_p. The
// encoding of sum_i c_i x^i is sum_i c_i p^i, so 0..p-1 are the prime field.
class GF {
public:
  explicit GF(int64_t q);

  int64_t q() const { return q_; }
  int64_t p() const { return p_; }
  int64_t e() const { return e_; }
  // coefficients of the modulus polynomial (degree e, monic)
  const std::vector<int64_t>& modulus() const { return mod_; }

  int64_t add(int64_t a, int64_t b) const;
  int64_t sub(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t mul(int64_t a, int64_t b) const;
  int64_t pow(int64_t a, uint64_t n) const;
  int64_t inv(int64_t a) const;
  int64_t digit(int64_t a, int64_t i) const; // i-th base-p digit
  int64_t from_digits(const std::vector<int64_t>& c) const;

private:
  int64_t q_, p_, e_;
  std::vector<int64_t> mod_;
  std::vector<int64_t> mul_tab_; // q*q, built eagerly (q stays small here)
  std::vector<int64_t> inv_tab_;
};

// Dense k x k matrices over GF(q); enough for witness evaluations that are
// too big to model as structure-constant rings.
class GFMatrix {
public:
  GFMatrix(const GF* f, size_t k);
  static GFMatrix identity(const GF* f, size_t k);
  static GFMatrix jordan_nilpotent(const GF* f, size_t k); // 1s above diagonal

  size_t k() const { return k_; }
  int64_t& at(size_t i, size_t j) { return a_[i * k_ + j]; }
  int64_t at(size_t i, size_t j) const { return a_[i * k_ + j]; }
  bool is_zero() const;

  GFMatrix mul(const GFMatrix& o) const;
  GFMatrix sub(const GFMatrix& o) const;
  GFMatrix pow(uint64_t n) const;

private:
  const GF* f_;
  size_t k_;
  std::vector<int64_t> a_;
};

} // namespace ringlab

#endif
