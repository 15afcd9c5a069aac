#include "knotile/bigint.hpp"

#include <algorithm>

namespace knotile {

BigUInt::BigUInt(uint64_t v) {
  while (v) {
    limbs_.push_back(uint32_t(v));
    v >>= 32;
  }
}

void BigUInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt& BigUInt::operator+=(const BigUInt& o) {
  size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = uint32_t(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(uint32_t(carry));
  return *this;
}

BigUInt BigUInt::operator*(uint64_t m) const {
  BigUInt out;
  if (m == 0 || limbs_.empty()) return out;
  uint64_t lo = uint32_t(m), hi = m >> 32;
  out.limbs_.assign(limbs_.size() + 2, 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t cur = limbs_[i];
    uint64_t p0 = cur * lo;
    uint64_t p1 = cur * hi;
    // add p0 at position i, p1 at position i+1
    uint64_t carry = 0, s;
    s = uint64_t(out.limbs_[i]) + uint32_t(p0);
    out.limbs_[i] = uint32_t(s);
    carry = s >> 32;
    s = uint64_t(out.limbs_[i + 1]) + uint32_t(p0 >> 32) + uint32_t(p1) + carry;
    out.limbs_[i + 1] = uint32_t(s);
    carry = s >> 32;
    size_t j = i + 2;
    carry += p1 >> 32;
    while (carry) {
      if (j >= out.limbs_.size()) out.limbs_.push_back(0);
      s = uint64_t(out.limbs_[j]) + carry;
      out.limbs_[j] = uint32_t(s);
      carry = s >> 32;
      ++j;
    }
  }
  out.trim();
  return out;
}

uint64_t BigUInt::low64() const {
  uint64_t v = 0;
  if (limbs_.size() > 0) v = limbs_[0];
  if (limbs_.size() > 1) v |= uint64_t(limbs_[1]) << 32;
  return v;
}

std::string BigUInt::to_string() const {
  if (limbs_.empty()) return "0";
  std::vector<uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    // divide by 10^9
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = uint32_t(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (work.empty()) {
      out = chunk + out;
    } else {
      out = std::string(9 - chunk.size(), '0') + chunk + out;
    }
  }
  return out;
}

}  // namespace knotile
