#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dumas {

// Unsigned arbitrary-precision integer on 64-bit little-endian limbs.
// Covers what the census counters need (add, subtract, multiply, powers,
// decimal rendering); it is deliberately not a general bignum.
class BigUint {
public:
  BigUint() = default;

  BigUint(std::uint64_t value) {
    if (value != 0) limbs_.push_back(value);
  }

  static BigUint from_u128(unsigned __int128 value) {
    BigUint out;
    if (value != 0) {
      out.limbs_.push_back(static_cast<std::uint64_t>(value));
      if (const auto high = static_cast<std::uint64_t>(value >> 64))
        out.limbs_.push_back(high);
    }
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      carry += limbs_[i];
      if (i < rhs.limbs_.size()) carry += rhs.limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(carry);
      carry >>= 64;
      if (carry == 0 && i >= rhs.limbs_.size()) return *this;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
  }

  // Requires *this >= rhs.
  BigUint& operator-=(const BigUint& rhs) {
    if (*this < rhs) throw std::underflow_error("BigUint: negative result");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      const std::uint64_t sub = (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
      const std::uint64_t before = limbs_[i];
      limbs_[i] = before - sub - borrow;
      borrow = (before < sub || (borrow && before == sub)) ? 1 : 0;
    }
    trim();
    return *this;
  }

  BigUint& operator*=(std::uint64_t m) {
    if (m == 0) {
      limbs_.clear();
      return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
      carry += static_cast<unsigned __int128>(limb) * m;
      limb = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
  }

  BigUint operator*(const BigUint& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    BigUint out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 carry = 0;
      for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
        carry += static_cast<unsigned __int128>(limbs_[i]) * rhs.limbs_[j] +
                 out.limbs_[i + j];
        out.limbs_[i + j] = static_cast<std::uint64_t>(carry);
        carry >>= 64;
      }
      out.limbs_[i + rhs.limbs_.size()] = static_cast<std::uint64_t>(carry);
    }
    out.trim();
    return out;
  }

  static BigUint pow(std::uint64_t base, unsigned exponent) {
    BigUint result{1};
    BigUint square{base};
    while (exponent != 0) {
      if (exponent & 1u) result = result * square;
      exponent >>= 1;
      if (exponent != 0) square = square * square;
    }
    return result;
  }

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend BigUint operator-(BigUint lhs, const BigUint& rhs) {
    lhs -= rhs;
    return lhs;
  }

  std::strong_ordering operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
      return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
      if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    return std::strong_ordering::equal;
  }

  bool operator==(const BigUint&) const = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    // peel 19 decimal digits at a time
    constexpr std::uint64_t chunk = 10'000'000'000'000'000'000ull;
    std::vector<std::uint64_t> work = limbs_;
    std::vector<std::uint64_t> groups;
    while (!work.empty()) {
      unsigned __int128 rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        const unsigned __int128 cur = (rem << 64) | work[i];
        work[i] = static_cast<std::uint64_t>(cur / chunk);
        rem = cur % chunk;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      groups.push_back(static_cast<std::uint64_t>(rem));
    }
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
      std::string digits = std::to_string(groups[i]);
      out.append(19 - digits.size(), '0');
      out += digits;
    }
    return out;
  }

  // Good to ~18 significant digits; used only for density rendering.
  long double to_long_double() const {
    long double value = 0.0L;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      value = value * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
    return value;
  }

private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;
};

}  // namespace dumas
