#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace dumas {

// All integer inputs are 64-bit signed; callers stay at desk scale
// (heights up to 1e6, factored values up to ~1e12). Larger inputs are
// rejected rather than silently truncated.
inline constexpr std::int64_t kMaxSieveLimit = 100'000'000;

inline std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? 0ull - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

// Smallest-prime-factor table over [2, limit].
class PrimeSieve {
public:
  explicit PrimeSieve(std::int64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeSieve: limit must be >= 2");
    if (limit > kMaxSieveLimit)
      throw std::invalid_argument("PrimeSieve: limit exceeds memory guard");
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) {
      if (spf_[i] != 0) continue;
      spf_[i] = static_cast<std::uint32_t>(i);
      for (std::int64_t j = i * i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }

  std::int64_t limit() const { return limit_; }

  bool is_prime(std::int64_t k) const {
    return k >= 2 && k <= limit_ && spf_[k] == static_cast<std::uint64_t>(k);
  }

  std::int64_t smallest_factor(std::int64_t k) const {
    if (k < 2 || k > limit_)
      throw std::invalid_argument("PrimeSieve: value out of range");
    return spf_[k];
  }

  std::vector<std::int64_t> primes() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 2; k <= limit_; ++k)
      if (spf_[k] == static_cast<std::uint64_t>(k)) out.push_back(k);
    return out;
  }

  // Appends the distinct primes of k (2 <= k <= limit) to out.
  void distinct_primes(std::int64_t k, std::vector<std::int64_t>& out) const {
    while (k > 1) {
      const std::int64_t p = spf_[k];
      out.push_back(p);
      while (k % p == 0) k /= p;
    }
  }

private:
  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

// a = unit * p^exponent with gcd(unit, p) = 1; the unit keeps the sign of a.
struct Valuation {
  int exponent;
  std::int64_t unit;
};

inline Valuation padic_valuation(std::int64_t a, std::int64_t p) {
  if (a == 0)
    throw std::domain_error("padic_valuation: zero has no finite valuation");
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be >= 2");
  int exponent = 0;
  while (a % p == 0) {
    a /= p;
    ++exponent;
  }
  return {exponent, a};
}

inline int padic_exponent(std::int64_t a, std::int64_t p) {
  int exponent = 0;
  while (a % p == 0) {
    a /= p;
    ++exponent;
  }
  return exponent;
}

// Distinct primes of |a|, ascending; empty for units. Trial division,
// adequate for |a| up to ~1e12.
inline std::vector<std::int64_t> prime_divisors(std::int64_t a) {
  if (a == 0) throw std::domain_error("prime_divisors: zero input");
  std::uint64_t m = abs_u64(a);
  std::vector<std::int64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(static_cast<std::int64_t>(d));
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(static_cast<std::int64_t>(m));
  return out;
}

// Sieve-backed variant; falls back to trial division past the sieve limit.
inline std::vector<std::int64_t> prime_divisors(std::int64_t a,
                                                const PrimeSieve& sieve) {
  if (a == 0) throw std::domain_error("prime_divisors: zero input");
  std::int64_t m = static_cast<std::int64_t>(abs_u64(a));
  if (m >= 0 && m <= sieve.limit()) {
    std::vector<std::int64_t> out;
    if (m > 1) sieve.distinct_primes(m, out);
    return out;
  }
  return prime_divisors(a);
}

// mu[d] for 0 <= d <= limit (index 0 unused). Linear sieve.
inline std::vector<std::int8_t> mobius_sieve(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("mobius_sieve: limit must be >= 1");
  if (limit > kMaxSieveLimit)
    throw std::invalid_argument("mobius_sieve: limit exceeds memory guard");
  std::vector<std::int8_t> mu(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  mu[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (const std::int64_t p : primes) {
      if (p * i > limit) break;
      composite[p * i] = true;
      if (i % p == 0) {
        mu[p * i] = 0;
        break;
      }
      mu[p * i] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return mu;
}

// gcd of absolute values; all-zero input yields 0.
inline std::int64_t gcd_all(std::span<const std::int64_t> values) {
  if (values.empty()) throw std::invalid_argument("gcd_all: empty input");
  std::uint64_t g = 0;
  for (const std::int64_t v : values) g = std::gcd(g, abs_u64(v));
  return static_cast<std::int64_t>(g);
}

inline bool pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

}  // namespace dumas
