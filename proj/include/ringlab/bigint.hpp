#ifndef RINGLAB_BIGINT_HPP
#define RINGLAB_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

// Unsigned big integer, base 2^32. Just enough for exact Burnside sums:
// add, multiply, small exact division, compare, decimal printing.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(uint64_t v);
  static BigUint pow(uint64_t base, uint64_t exp);
  static BigUint factorial(uint32_t n);

  BigUint& operator+=(const BigUint& o);
  BigUint operator+(const BigUint& o) const;
  BigUint operator*(const BigUint& o) const;
  BigUint& mul_small(uint32_t m);
  // divides exactly; aborts on a nonzero remainder
  BigUint& divexact_small(uint32_t d);

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUint& o) const { return !(*this == o); }

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;
  std::string str() const;

private:
  std::vector<uint32_t> limbs_; // little endian, normalized (no high zeros)
  void trim();
};

} // namespace ringlab

#endif
