#include "ringlab/gf.hpp"

#include <cassert>
#include <functional>

#include "ringlab/errors.hpp"

namespace ringlab {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(int64_t q, int64_t& p, int64_t& e) {
  if (q < 2) return false;
  for (int64_t d = 2; d * d <= q; ++d) {
    if (q % d != 0) continue;
    p = d;
    e = 0;
    int64_t m = q;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    return m == 1;
  }
  p = q;
  e = 1;
  return true;
}

namespace {

// polynomial arithmetic over F_p with coefficient vectors (low degree first)
std::vector<int64_t> poly_mul_mod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                  const std::vector<int64_t>& mod, int64_t p) {
  std::vector<int64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce modulo the monic polynomial `mod` of degree e
  size_t e = mod.size() - 1;
  for (size_t d = prod.size(); d-- > e;) {
    int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t i = 0; i < e; ++i)
      prod[d - e + i] = ((prod[d - e + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(e);
  return prod;
}

bool poly_is_irreducible(const std::vector<int64_t>& f, int64_t p) {
  // no roots and, for degree <= 3, rootlessness suffices; above that do
  // trial division by all monic polynomials of degree <= deg/2.
  int64_t e = int64_t(f.size()) - 1;
  auto eval = [&](int64_t x) {
    int64_t acc = 0, xp = 1;
    for (int64_t c : f) {
      acc = (acc + c * xp) % p;
      xp = (xp * x) % p;
    }
    return acc;
  };
  for (int64_t x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (e <= 3) return true;

  // trial division
  int64_t half = e / 2;
  std::vector<int64_t> div(half + 1, 0);
  std::function<bool(int64_t)> try_deg = [&](int64_t d) -> bool {
    // iterate all monic polys of degree d
    std::vector<int64_t> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      // long-divide f by g, check remainder
      std::vector<int64_t> rem = f;
      for (size_t t = rem.size(); t-- > size_t(d);) {
        int64_t c = rem[t];
        if (c == 0) continue;
        for (int64_t i = 0; i <= d; ++i)
          rem[t - d + i] = ((rem[t - d + i] - c * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (size_t i = 0; i < size_t(d); ++i)
        if (rem[i] != 0) zero = false;
      if (zero) return true;
      // next g
      int64_t pos = 0;
      while (pos < d && ++g[pos] == p) g[pos++] = 0;
      if (pos == d) break;
    }
    return false;
  };
  for (int64_t d = 2; d <= half; ++d)
    if (try_deg(d)) return false;
  return true;
}

std::vector<int64_t> smallest_irreducible(int64_t p, int64_t e) {
  if (e == 1) return {0, 1}; // x itself; unused in the prime-field case
  std::vector<int64_t> f(e + 1, 0);
  f[e] = 1;
  while (true) {
    if (poly_is_irreducible(f, p)) return f;
    int64_t pos = 0;
    while (pos < e && ++f[pos] == p) f[pos++] = 0;
    require(pos < e, errc::internal_check_failed, "no irreducible polynomial found");
  }
}

} // namespace

GF::GF(int64_t q) : q_(q) {
  require(prime_power(q, p_, e_), errc::not_prime_power,
          std::to_string(q) + " is not a prime power");
  require(q <= 4096, errc::budget_exceeded, "field too large for table arithmetic");
  mod_ = smallest_irreducible(p_, e_);

  auto digits = [&](int64_t a) {
    std::vector<int64_t> c(e_);
    for (int64_t i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  mul_tab_.assign(q_ * q_, 0);
  for (int64_t a = 0; a < q_; ++a)
    for (int64_t b = 0; b < q_; ++b) {
      if (e_ == 1) {
        mul_tab_[a * q_ + b] = (a * b) % p_;
      } else {
        std::vector<int64_t> c = poly_mul_mod(digits(a), digits(b), mod_, p_);
        mul_tab_[a * q_ + b] = from_digits(c);
      }
    }
  inv_tab_.assign(q_, 0);
  for (int64_t a = 1; a < q_; ++a)
    for (int64_t b = 1; b < q_; ++b)
      if (mul_tab_[a * q_ + b] == 1) {
        inv_tab_[a] = b;
        break;
      }
  for (int64_t a = 1; a < q_; ++a)
    require(inv_tab_[a] != 0, errc::internal_check_failed, "field element with no inverse");
}

int64_t GF::add(int64_t a, int64_t b) const {
  int64_t out = 0, mult = 1;
  for (int64_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

int64_t GF::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t GF::neg(int64_t a) const {
  int64_t out = 0, mult = 1;
  for (int64_t i = 0; i < e_; ++i) {
    int64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

int64_t GF::mul(int64_t a, int64_t b) const { return mul_tab_[a * q_ + b]; }

int64_t GF::pow(int64_t a, uint64_t n) const {
  int64_t acc = 1;
  while (n > 0) {
    if (n & 1) acc = mul(acc, a);
    a = mul(a, a);
    n >>= 1;
  }
  return acc;
}

int64_t GF::inv(int64_t a) const {
  require(a != 0, errc::internal_check_failed, "inverse of zero");
  return inv_tab_[a];
}

int64_t GF::digit(int64_t a, int64_t i) const {
  for (int64_t t = 0; t < i; ++t) a /= p_;
  return a % p_;
}

int64_t GF::from_digits(const std::vector<int64_t>& c) const {
  int64_t out = 0, mult = 1;
  for (int64_t i = 0; i < e_; ++i) {
    out += (i < int64_t(c.size()) ? c[i] : 0) * mult;
    mult *= p_;
  }
  return out;
}

GFMatrix::GFMatrix(const GF* f, size_t k) : f_(f), k_(k), a_(k * k, 0) {}

GFMatrix GFMatrix::identity(const GF* f, size_t k) {
  GFMatrix m(f, k);
  for (size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

GFMatrix GFMatrix::jordan_nilpotent(const GF* f, size_t k) {
  GFMatrix m(f, k);
  for (size_t i = 0; i + 1 < k; ++i) m.at(i, i + 1) = 1;
  return m;
}

bool GFMatrix::is_zero() const {
  for (int64_t x : a_)
    if (x != 0) return false;
  return true;
}

GFMatrix GFMatrix::mul(const GFMatrix& o) const {
  GFMatrix out(f_, k_);
  for (size_t i = 0; i < k_; ++i)
    for (size_t t = 0; t < k_; ++t) {
      int64_t v = at(i, t);
      if (v == 0) continue;
      for (size_t j = 0; j < k_; ++j)
        out.at(i, j) = f_->add(out.at(i, j), f_->mul(v, o.at(t, j)));
    }
  return out;
}

GFMatrix GFMatrix::sub(const GFMatrix& o) const {
  GFMatrix out(f_, k_);
  for (size_t i = 0; i < k_ * k_; ++i) out.a_[i] = f_->sub(a_[i], o.a_[i]);
  return out;
}

GFMatrix GFMatrix::pow(uint64_t n) const {
  GFMatrix acc = identity(f_, k_);
  GFMatrix base = *this;
  while (n > 0) {
    if (n & 1) acc = acc.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  return acc;
}

} // namespace ringlab
