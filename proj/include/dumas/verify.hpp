#pragma once

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "dumas/census.hpp"
#include "dumas/constants.hpp"
#include "dumas/criteria.hpp"

namespace dumas {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::string fmt(const char* format, ...) {
  char buffer[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

}  // namespace detail

// Computed constants against the published 4-decimal reference rows
// (n = 2..10, band 2e-3), plus the closed form for n = 3.
inline std::vector<CheckResult> verify_reference_table(
    std::int64_t prime_limit = kDefaultPrimeLimit) {
  std::vector<CheckResult> checks;
  for (const ConstantsRow& row : constants_table(2, 10, prime_limit)) {
    const double dev_upper = std::fabs(row.tau - *row.ref_upper);
    const double dev_lower = std::fabs(row.eisenstein_lower - *row.ref_lower);
    checks.push_back(
        {detail::fmt("table1 n=%d upper", row.n), dev_upper <= 2e-3,
         detail::fmt("tau=%.6f ref=%.4f dev=%.1e", row.tau, *row.ref_upper,
                     dev_upper)});
    checks.push_back(
        {detail::fmt("table1 n=%d lower", row.n), dev_lower <= 2e-3,
         detail::fmt("lower=%.6f ref=%.4f dev=%.1e", row.eisenstein_lower,
                     *row.ref_lower, dev_lower)});
  }
  const double tau3 = tau(3, prime_limit);
  const double closed = 1.0 - 6.0 / (M_PI * M_PI);
  checks.push_back({"tau3 closed form", std::fabs(tau3 - closed) <= 1e-6,
                    detail::fmt("tau3=%.9f closed=%.9f", tau3, closed)});
  return checks;
}

namespace detail {

// Counterexamples to the shared-factor necessity conditions over the
// magnitude box [1, height]^(n+1) (signs cannot change either side).
inline std::uint64_t necessity_counterexamples(int degree, std::int64_t height) {
  std::uint64_t violations = 0;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1, 1);
  for (;;) {
    const Polynomial f(coeffs);
    if (is_dumas(f).satisfied) {
      if (degree == 2) {
        if (pairwise_coprime(coeffs[0], coeffs[1], coeffs[2])) ++violations;
      } else {
        const auto middles =
            std::span<const std::int64_t>(coeffs).subspan(1, degree - 1);
        if (gcd_all(middles) == 1) ++violations;
      }
    }
    std::size_t pos = 0;
    for (; pos < coeffs.size(); ++pos) {
      if (++coeffs[pos] <= height) break;
      coeffs[pos] = 1;
    }
    if (pos == coeffs.size()) break;
  }
  return violations;
}

}  // namespace detail

// The shared-factor necessity sweep plus the exact counting bound at one
// (degree, height).
inline std::vector<CheckResult> verify_gcd_lemmas(
    int degree, std::int64_t height, const CensusOptions& options = {}) {
  std::vector<CheckResult> checks;
  const std::uint64_t violations = detail::necessity_counterexamples(degree, height);
  checks.push_back(
      {detail::fmt("necessity n=%d H<=%lld", degree,
                   static_cast<long long>(height)),
       violations == 0,
       detail::fmt("%llu counterexamples", static_cast<unsigned long long>(violations))});
  const BoundCheck bound = dumas_upper_bound_check(degree, height, options);
  checks.push_back(
      {detail::fmt("count bound n=%d H=%lld", degree,
                   static_cast<long long>(height)),
       bound.holds,
       detail::fmt("dumas=%s bound=%s", bound.dumas_count.to_string().c_str(),
                   bound.bound.to_string().c_str())});
  return checks;
}

namespace detail {

struct ImplicationSweep {
  std::uint64_t eisenstein_hits = 0;
  std::uint64_t dumas_hits = 0;
  std::uint64_t eisenstein_violations = 0;  // Eisenstein at p but not single-segment at p
  std::uint64_t irreducible_violations = 0;  // single-segment but reducible
};

// Full signed box of degree n, height <= H: every Eisenstein witness must
// be a single-segment witness, and every single-segment polynomial must
// pass the Kronecker irreducibility test.
inline ImplicationSweep implication_sweep(int degree, std::int64_t height) {
  ImplicationSweep sweep;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1, -height);
  for (;;) {
    const Polynomial f(coeffs);
    if (f.constant_term() != 0) {
      for (const std::int64_t p : prime_divisors(f.constant_term())) {
        if (!eisenstein_at_prime(f, p)) continue;
        ++sweep.eisenstein_hits;
        if (!dumas_at_prime(f, p)) ++sweep.eisenstein_violations;
      }
    }
    if (is_dumas(f).satisfied) {
      ++sweep.dumas_hits;
      if (!kronecker_irreducible(f)) ++sweep.irreducible_violations;
    }
    int pos = 0;
    for (; pos <= degree; ++pos) {
      auto& c = coeffs[static_cast<std::size_t>(pos)];
      ++c;
      if (pos == degree && c == 0) ++c;
      if (c <= height) break;
      c = -height;
    }
    if (pos > degree) break;
  }
  return sweep;
}

}  // namespace detail

inline std::vector<CheckResult> verify_implications(
    std::int64_t height, const std::vector<int>& degrees = {2, 3}) {
  std::vector<CheckResult> checks;
  for (const int degree : degrees) {
    const detail::ImplicationSweep sweep =
        detail::implication_sweep(degree, height);
    checks.push_back(
        {detail::fmt("eisenstein=>dumas n=%d H<=%lld", degree,
                     static_cast<long long>(height)),
         sweep.eisenstein_violations == 0,
         detail::fmt("%llu witnesses, %llu violations",
                     static_cast<unsigned long long>(sweep.eisenstein_hits),
                     static_cast<unsigned long long>(sweep.eisenstein_violations))});
    checks.push_back(
        {detail::fmt("dumas=>irreducible n=%d H<=%lld", degree,
                     static_cast<long long>(height)),
         sweep.irreducible_violations == 0,
         detail::fmt("%llu dumas polynomials, %llu violations",
                     static_cast<unsigned long long>(sweep.dumas_hits),
                     static_cast<unsigned long long>(sweep.irreducible_violations))});
  }
  return checks;
}

}  // namespace dumas
