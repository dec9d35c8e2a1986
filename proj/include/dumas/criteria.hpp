#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dumas/arith.hpp"
#include "dumas/newton.hpp"
#include "dumas/poly.hpp"

namespace dumas {

enum class VerdictReason {
  none,
  no_candidate_primes,
  multi_segment_at_every_candidate,
  zero_endpoint,
  degree_too_small,
};

inline const char* to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::none: return "none";
    case VerdictReason::no_candidate_primes: return "no-candidate-primes";
    case VerdictReason::multi_segment_at_every_candidate:
      return "multi-segment-at-every-candidate";
    case VerdictReason::zero_endpoint: return "zero-endpoint";
    case VerdictReason::degree_too_small: return "degree-too-small";
  }
  return "unknown";
}

struct CriterionVerdict {
  bool satisfied = false;
  std::optional<std::int64_t> witness_prime;
  VerdictReason reason = VerdictReason::none;
};

// Single-segment test by explicit diagram construction.
inline bool dumas_at_prime(const Polynomial& f, std::int64_t p) {
  if (f.degree() < 2)
    throw std::invalid_argument("dumas_at_prime: degree must be >= 2");
  return newton_diagram(f, p).segment_count == 1;
}

// Same predicate without building the diagram: the chord (0,a0)-(n,an) has
// no interior lattice point iff gcd(n, |an - a0|) = 1, and it is the whole
// lower hull iff every present middle point lies strictly above it.
inline bool dumas_at_prime_arithmetic(const Polynomial& f, std::int64_t p) {
  if (f.degree() < 2)
    throw std::invalid_argument("dumas_at_prime: degree must be >= 2");
  if (f.constant_term() == 0)
    throw CriterionInapplicableError("dumas_at_prime: zero constant term");
  if (p < 2) throw std::invalid_argument("dumas_at_prime: p must be >= 2");
  const std::int64_t n = f.degree();
  const std::int64_t a0 = padic_exponent(f.constant_term(), p);
  const std::int64_t an = padic_exponent(f.leading_coefficient(), p);
  if (std::gcd(n, std::abs(an - a0)) != 1) return false;
  for (std::int64_t i = 1; i < n; ++i) {
    const std::int64_t c = f[static_cast<int>(i)];
    if (c == 0) continue;
    const std::int64_t ai = padic_exponent(c, p);
    if (n * ai <= (n - i) * a0 + i * an) return false;
  }
  return true;
}

// Only primes dividing A0*An can satisfy the single-segment test: with
// a0 = an = 0 the chord is horizontal and carries interior lattice points
// for every n >= 2.
inline std::vector<std::int64_t> candidate_primes(const Polynomial& f) {
  if (f.constant_term() == 0)
    throw CriterionInapplicableError("candidate_primes: zero constant term");
  std::vector<std::int64_t> primes = prime_divisors(f.constant_term());
  const std::vector<std::int64_t> lead = prime_divisors(f.leading_coefficient());
  primes.insert(primes.end(), lead.begin(), lead.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

// Verdict over all candidate primes, smallest witness first. Total: bad
// inputs yield an unsatisfied verdict rather than an exception, so census
// loops stay branch-free.
inline CriterionVerdict is_dumas(const Polynomial& f) {
  if (f.degree() < 2) return {false, {}, VerdictReason::degree_too_small};
  if (f.constant_term() == 0) return {false, {}, VerdictReason::zero_endpoint};
  const std::vector<std::int64_t> candidates = candidate_primes(f);
  if (candidates.empty())
    return {false, {}, VerdictReason::no_candidate_primes};
  for (const std::int64_t p : candidates)
    if (dumas_at_prime_arithmetic(f, p))
      return {true, p, VerdictReason::none};
  return {false, {}, VerdictReason::multi_segment_at_every_candidate};
}

// p | Ai for all i < n, p does not divide An, p^2 does not divide A0.
// A0 = 0 fails (zero is divisible by p^2).
inline bool eisenstein_at_prime(const Polynomial& f, std::int64_t p) {
  if (f.degree() < 1)
    throw std::invalid_argument("eisenstein_at_prime: degree must be >= 1");
  if (p < 2) throw std::invalid_argument("eisenstein_at_prime: p must be >= 2");
  const int n = f.degree();
  if (f.leading_coefficient() % p == 0) return false;
  for (int i = 0; i < n; ++i)
    if (f[i] % p != 0) return false;
  if (f.constant_term() == 0) return false;
  return padic_exponent(f.constant_term(), p) == 1;
}

// Smallest witness among the prime divisors of A0 (only those can work).
inline CriterionVerdict is_eisenstein(const Polynomial& f) {
  if (f.degree() < 1) return {false, {}, VerdictReason::degree_too_small};
  if (f.constant_term() == 0) return {false, {}, VerdictReason::zero_endpoint};
  const std::vector<std::int64_t> candidates = prime_divisors(f.constant_term());
  if (candidates.empty())
    return {false, {}, VerdictReason::no_candidate_primes};
  for (const std::int64_t p : candidates)
    if (eisenstein_at_prime(f, p))
      return {true, p, VerdictReason::none};
  return {false, {}, VerdictReason::multi_segment_at_every_candidate};
}

// Necessary condition in degree 2 with all coefficients nonzero: a
// single-segment polynomial must have a coefficient pair sharing a factor.
inline bool dumas_prefilter_quadratic(const Polynomial& f) {
  if (f.degree() != 2)
    throw std::invalid_argument("dumas_prefilter_quadratic: degree must be 2");
  if (f[0] == 0 || f[1] == 0)
    throw std::invalid_argument(
        "dumas_prefilter_quadratic: coefficients must be nonzero");
  return !pairwise_coprime(static_cast<std::int64_t>(abs_u64(f[0])),
                           static_cast<std::int64_t>(abs_u64(f[1])),
                           static_cast<std::int64_t>(abs_u64(f[2])));
}

// Necessary condition for n >= 2 with nonzero middle coefficients: the
// middle coefficients must share a common factor.
inline bool dumas_prefilter_middle_gcd(const Polynomial& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("dumas_prefilter_middle_gcd: degree must be >= 2");
  for (int i = 1; i < f.degree(); ++i)
    if (f[i] == 0)
      throw std::invalid_argument(
          "dumas_prefilter_middle_gcd: middle coefficients must be nonzero");
  const auto middles = f.coefficients().subspan(1, f.degree() - 1);
  return gcd_all(middles) != 1;
}

namespace detail {

inline std::int64_t content(const Polynomial& f) {
  return gcd_all(f.coefficients());
}

inline Polynomial primitive_part(const Polynomial& f) {
  const std::int64_t c = content(f);
  if (c == 1) return f;
  std::vector<std::int64_t> coeffs(f.coefficients().begin(),
                                   f.coefficients().end());
  for (auto& v : coeffs) v /= c;
  return Polynomial(std::move(coeffs));
}

inline std::vector<std::int64_t> positive_divisors(std::int64_t v) {
  const std::int64_t m = static_cast<std::int64_t>(abs_u64(v));
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d != m / d) out.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact division over the integers, aborting as soon as a quotient
// coefficient fails to be integral.
inline bool try_exact_divide(const Polynomial& num, const Polynomial& den,
                             std::vector<std::int64_t>* quotient) {
  const int dn = num.degree();
  const int dd = den.degree();
  if (dd > dn) return false;
  std::vector<std::int64_t> rem(num.coefficients().begin(),
                                num.coefficients().end());
  std::vector<std::int64_t> q(static_cast<std::size_t>(dn - dd) + 1, 0);
  const std::int64_t lead = den.leading_coefficient();
  for (int k = dn - dd; k >= 0; --k) {
    const std::int64_t cur = rem[static_cast<std::size_t>(k + dd)];
    if (cur % lead != 0) return false;
    const std::int64_t c = cur / lead;
    q[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * den[j];
  }
  for (const std::int64_t r : rem)
    if (r != 0) return false;
  if (quotient != nullptr) *quotient = std::move(q);
  return true;
}

// Reduced fraction on 64 bits; enough for the interpolation scale the
// irreducibility test runs at.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    return g > 1 ? Frac{n / g, d / g} : Frac{n, d};
  }

  Frac operator+(const Frac& o) const {
    return make(num * o.den + o.num * den, den * o.den);
  }
  Frac operator-(const Frac& o) const {
    return make(num * o.den - o.num * den, den * o.den);
  }
  Frac operator*(const Frac& o) const { return make(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return make(num * o.den, den * o.num); }
  bool is_integer() const { return den == 1; }
};

// Degree < m polynomial through (xs[k], ys[k]) by divided differences;
// nullopt when a coefficient is non-integral.
inline std::optional<std::vector<std::int64_t>> interpolate_integer(
    std::span<const std::int64_t> xs, std::span<const std::int64_t> ys) {
  const std::size_t m = xs.size();
  std::vector<Frac> dd(m);
  for (std::size_t k = 0; k < m; ++k) dd[k] = Frac{ys[k], 1};
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t k = m - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / Frac{xs[k] - xs[k - level], 1};
  // Horner expansion of the Newton form:
  // p = (...(dd[m-1] (x - xs[m-2]) + dd[m-2]) ... )(x - xs[0]) + dd[0]
  std::vector<Frac> coeffs{dd[m - 1]};
  for (std::size_t k = m - 1; k-- > 0;) {
    std::vector<Frac> next(coeffs.size() + 1, Frac{0, 1});
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] = next[j + 1] + coeffs[j];
      next[j] = next[j] - coeffs[j] * Frac{xs[k], 1};
    }
    next[0] = next[0] + dd[k];
    coeffs.swap(next);
  }
  std::vector<std::int64_t> out;
  out.reserve(coeffs.size());
  for (const Frac& c : coeffs) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.num);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace detail

// Kronecker interpolation test on the primitive part: for each factor
// degree d <= n/2, evaluate at d+1 small integers, run through the signed
// divisor combinations of the values, interpolate and trial-divide.
// Desk scale only (n <= 4, height up to a few hundred).
inline bool kronecker_irreducible(const Polynomial& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("kronecker_irreducible: degree must be >= 1");
  if (f.degree() == 1) return true;
  const Polynomial g = detail::primitive_part(f);
  const int n = g.degree();
  const int max_factor_degree = n / 2;

  // evaluation points 0, 1, -1, 2, -2, ...; an integer root is a linear
  // factor, so the answer is immediate
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> values;
  for (std::int64_t step = 0; static_cast<int>(xs.size()) < max_factor_degree + 1;
       ++step) {
    const std::int64_t x = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
    const std::int64_t v = g.evaluate(x);
    if (v == 0) return false;
    xs.push_back(x);
    values.push_back(v);
  }

  for (int d = 1; d <= max_factor_degree; ++d) {
    std::vector<std::vector<std::int64_t>> choices(
        static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
      const auto divs = detail::positive_divisors(values[static_cast<std::size_t>(k)]);
      auto& slot = choices[static_cast<std::size_t>(k)];
      for (const std::int64_t v : divs) {
        slot.push_back(v);
        if (k > 0) slot.push_back(-v);  // sign of the k = 0 value is fixed: u and -u divide alike
      }
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
    std::vector<std::int64_t> ys(static_cast<std::size_t>(d) + 1, 0);
    while (true) {
      for (int k = 0; k <= d; ++k)
        ys[static_cast<std::size_t>(k)] =
            choices[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
      const auto candidate = detail::interpolate_integer(
          std::span<const std::int64_t>(xs.data(), static_cast<std::size_t>(d) + 1),
          ys);
      if (candidate && candidate->size() >= 2) {
        const Polynomial u(*candidate);
        std::vector<std::int64_t> q;
        if (detail::try_exact_divide(g, u, &q) && q.size() >= 2) return false;
      }
      // odometer over the divisor choices
      std::size_t pos = 0;
      while (pos < idx.size()) {
        if (++idx[pos] < choices[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return true;
}

}  // namespace dumas
