#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dumas/arith.hpp"

namespace dumas {

inline constexpr std::int64_t kDefaultPrimeLimit = 100'000;

// Riemann zeta for s > 1: partial sum to N plus the integral tail
// N^(1-s)/(s-1). The corrected truncation error is below N^(-s), so N is
// chosen from N^(-s) < tolerance/2; summation runs smallest terms first.
inline double zeta(double s, double tolerance) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta: s must be > 1");
  if (!(tolerance >= 1e-13))
    throw std::invalid_argument("zeta: tolerance below double-precision floor");
  const double n_real = std::pow(2.0 / tolerance, 1.0 / s);
  if (!(n_real < 2e8))
    throw std::invalid_argument("zeta: tolerance unattainable for this s");
  const std::int64_t n = static_cast<std::int64_t>(n_real) + 1;
  double sum = 0.0;
  for (std::int64_t k = n; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  return sum + std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
}

namespace detail {

inline double tau2_from_primes(const std::vector<std::int64_t>& primes) {
  double product = 1.0;
  for (const std::int64_t prime : primes) {
    const double p = static_cast<double>(prime);
    product *= (1.0 - 1.0 / p) * (1.0 - 1.0 / p) * (1.0 + 2.0 / p);
  }
  return 1.0 - product;
}

inline double eisenstein_lower_from_primes(
    int n, const std::vector<std::int64_t>& primes) {
  double product = 1.0;
  for (const std::int64_t prime : primes) {
    const double p = static_cast<double>(prime);
    const double q = 1.0 - 1.0 / p;
    product *= 1.0 - q * q * std::pow(p, -static_cast<double>(n));
  }
  return 1.0 - product;
}

}  // namespace detail

// Limiting upper density of single-segment polynomials of degree n:
// n = 2 uses the pairwise-coprimality Euler product truncated at
// prime_limit, n >= 3 the closed form 1 - 1/zeta(n-1).
inline double tau(int n, std::int64_t prime_limit = kDefaultPrimeLimit) {
  if (n < 2) throw std::invalid_argument("tau: n must be >= 2");
  if (n == 2) {
    if (prime_limit < 2) throw std::invalid_argument("tau: prime_limit must be >= 2");
    return detail::tau2_from_primes(PrimeSieve(prime_limit).primes());
  }
  return 1.0 - 1.0 / zeta(static_cast<double>(n - 1), 1e-12);
}

// Lower density from the Eisenstein count: probability that some prime p
// has p | A0..A_{n-1}, p^2 not | A0 and p not | An, per-prime factor
// (1 - 1/p)^2 p^(-n), truncated at prime_limit. Reconstructed from an
// external reference and validated against the published table values.
inline double eisenstein_lower(int n,
                               std::int64_t prime_limit = kDefaultPrimeLimit) {
  if (n < 2) throw std::invalid_argument("eisenstein_lower: n must be >= 2");
  if (prime_limit < 2)
    throw std::invalid_argument("eisenstein_lower: prime_limit must be >= 2");
  return detail::eisenstein_lower_from_primes(n, PrimeSieve(prime_limit).primes());
}

// Published 4-decimal reference bounds for n = 2..10. The source carries
// ~1e-3 of its own rounding/truncation noise, so comparisons use a loose
// 2e-3 band.
inline std::optional<double> reference_upper(int n) {
  static constexpr double values[] = {0.7133, 0.3922, 0.1681, 0.0766, 0.0357,
                                      0.0181, 0.0079, 0.0049, 0.0020};
  if (n < 2 || n > 10) return std::nullopt;
  return values[n - 2];
}

inline std::optional<double> reference_lower(int n) {
  static constexpr double values[] = {0.1677, 0.0556, 0.0224, 0.0099, 0.0046,
                                      0.0022, 0.0010, 0.0005, 0.0003};
  if (n < 2 || n > 10) return std::nullopt;
  return values[n - 2];
}

struct ConstantsRow {
  int n = 0;
  double tau = 0.0;
  double eisenstein_lower = 0.0;
  std::optional<double> ref_upper;
  std::optional<double> ref_lower;
  std::int64_t prime_limit = 0;
};

inline std::vector<ConstantsRow> constants_table(
    int n_min = 2, int n_max = 10,
    std::int64_t prime_limit = kDefaultPrimeLimit) {
  if (n_min < 2 || n_max < n_min || n_max > 64)
    throw std::invalid_argument("constants_table: degree range must lie in [2, 64]");
  if (prime_limit < 2)
    throw std::invalid_argument("constants_table: prime_limit must be >= 2");
  const std::vector<std::int64_t> primes = PrimeSieve(prime_limit).primes();
  std::vector<ConstantsRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  for (int n = n_min; n <= n_max; ++n) {
    ConstantsRow row;
    row.n = n;
    row.tau = (n == 2) ? detail::tau2_from_primes(primes)
                       : 1.0 - 1.0 / zeta(static_cast<double>(n - 1), 1e-12);
    row.eisenstein_lower = detail::eisenstein_lower_from_primes(n, primes);
    row.ref_upper = reference_upper(n);
    row.ref_lower = reference_lower(n);
    row.prime_limit = prime_limit;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dumas
