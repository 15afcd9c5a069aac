#pragma once
// Minimal unsigned big integer: just what the transfer-matrix census needs.

#include <cstdint>
#include <string>
#include <vector>

namespace knotile {

class BigUInt {
 public:
  BigUInt() = default;
  BigUInt(uint64_t v);

  BigUInt& operator+=(const BigUInt& o);
  BigUInt operator*(uint64_t m) const;
  bool operator==(const BigUInt& o) const = default;

  bool is_zero() const { return limbs_.empty(); }
  // true iff the value fits in 64 bits; then `low64` is the value
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t low64() const;

  std::string to_string() const;

 private:
  std::vector<uint32_t> limbs_;  // little-endian base 2^32, no trailing zeros
  void trim();
};

}  // namespace knotile
