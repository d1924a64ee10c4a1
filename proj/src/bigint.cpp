#include "ringlab/bigint.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"

namespace ringlab {

BigUint::BigUint(uint64_t v) {
  while (v > 0) {
    limbs_.push_back(uint32_t(v & 0xffffffffu));
    v >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(uint64_t base, uint64_t exp) {
  BigUint acc(1);
  BigUint b(base);
  while (exp > 0) {
    if (exp & 1) acc = acc * b;
    b = b * b;
    exp >>= 1;
  }
  return acc;
}

BigUint BigUint::factorial(uint32_t n) {
  BigUint acc(1);
  for (uint32_t i = 2; i <= n; ++i) acc.mul_small(i);
  return acc;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = uint32_t(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(uint32_t(carry));
  return *this;
}

BigUint BigUint::operator+(const BigUint& o) const {
  BigUint out = *this;
  out += o;
  return out;
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint();
  BigUint out;
  out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + uint64_t(limbs_[i]) * o.limbs_[j] + carry;
      out.limbs_[i + j] = uint32_t(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + o.limbs_.size();
    while (carry) {
      uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = uint32_t(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigUint& BigUint::mul_small(uint32_t m) {
  uint64_t carry = 0;
  for (uint32_t& limb : limbs_) {
    uint64_t cur = uint64_t(limb) * m + carry;
    limb = uint32_t(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry) {
    limbs_.push_back(uint32_t(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
  return *this;
}

BigUint& BigUint::divexact_small(uint32_t d) {
  require(d != 0, errc::internal_check_failed, "division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = uint32_t(cur / d);
    rem = cur % d;
  }
  require(rem == 0, errc::internal_check_failed, "inexact division in exact context");
  trim();
  return *this;
}

uint64_t BigUint::to_u64() const {
  require(fits_u64(), errc::internal_check_failed, "value exceeds 64 bits");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

std::string BigUint::str() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    uint64_t rem = 0;
    for (size_t i = tmp.limbs_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | tmp.limbs_[i];
      tmp.limbs_[i] = uint32_t(cur / 10);
      rem = cur % 10;
    }
    tmp.trim();
    out.push_back(char('0' + rem));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

} // namespace ringlab
