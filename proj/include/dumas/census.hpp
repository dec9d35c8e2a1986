#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dumas/arith.hpp"
#include "dumas/bigint.hpp"
#include "dumas/constants.hpp"
#include "dumas/criteria.hpp"
#include "dumas/poly.hpp"

namespace dumas {

enum class CensusKind {
  dumas,
  eisenstein,
  irreducible,
  coprime_tuples,
  pairwise_coprime_triples,
};

inline const char* to_string(CensusKind kind) {
  switch (kind) {
    case CensusKind::dumas: return "dumas";
    case CensusKind::eisenstein: return "eisenstein";
    case CensusKind::irreducible: return "irreducible";
    case CensusKind::coprime_tuples: return "coprime";
    case CensusKind::pairwise_coprime_triples: return "pairwise-coprime";
  }
  return "unknown";
}

// Engine selection for the polynomial censuses. The symmetric engine is the
// production path; the naive full signed-box enumeration is the oracle it is
// checked against.
enum class CountingEngine { symmetric, naive };

struct CensusOptions {
  CountingEngine engine = CountingEngine::symmetric;
  int threads = 0;     // 0: hardware concurrency
  int partitions = 0;  // 0: derived from the thread count
};

struct CensusResult {
  int degree = 0;  // n for polynomial censuses, tuple length k otherwise
  std::int64_t height = 0;
  CensusKind kind = CensusKind::dumas;
  BigUint count;
  BigUint total;

  double density() const {
    return static_cast<double>(count.to_long_double() / total.to_long_double());
  }
};

inline constexpr int kMaxCensusDegree = 64;
inline constexpr std::int64_t kMaxCensusHeight = 1'000'000;
inline constexpr std::int64_t kMaxPairwiseCoprimeHeight = 2000;

namespace detail {

// Exact box size of degree-n height-<=H polynomials: 2H * (2H+1)^n.
inline BigUint polynomial_box_size(int n, std::int64_t H) {
  BigUint total = BigUint::pow(static_cast<std::uint64_t>(2 * H + 1),
                               static_cast<unsigned>(n));
  total *= static_cast<std::uint64_t>(2 * H);
  return total;
}

inline void validate_polynomial_census(int n, std::int64_t H) {
  if (n < 2) throw std::invalid_argument("census: degree must be >= 2");
  if (n > kMaxCensusDegree)
    throw std::invalid_argument("census: degree exceeds supported range");
  if (H < 1) throw std::invalid_argument("census: height must be >= 1");
  if (H > kMaxCensusHeight)
    throw std::invalid_argument("census: height exceeds supported range");
}

inline void guard_enumeration_work(long double tuples) {
  if (tuples > 2e12L)
    throw std::invalid_argument("census: box too large for exact enumeration");
}

// Full signed-box oracle: every coefficient tuple with |Ai| <= H, An != 0.
template <typename Predicate>
BigUint naive_box_count(int n, std::int64_t H, Predicate&& predicate) {
  guard_enumeration_work(std::pow(static_cast<long double>(2 * H + 1), n + 1));
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, -H);
  std::uint64_t count = 0;
  for (;;) {
    if (predicate(Polynomial(coeffs))) ++count;
    int pos = 0;
    for (; pos <= n; ++pos) {
      auto& c = coeffs[static_cast<std::size_t>(pos)];
      ++c;
      if (pos == n && c == 0) ++c;
      if (c <= H) break;
      c = -H;
    }
    if (pos > n) break;
  }
  return BigUint(count);
}

// Divisibility demands one candidate prime places on the middle magnitudes
// |A1|..|A_{n-1}|: slot i-1 must be zero or a multiple of req(rule, i-1).
// A required divisor above H marks a slot no nonzero magnitude can satisfy.
struct PairRules {
  int middle_slots = 0;
  int rule_count = 0;
  std::vector<std::int64_t> required;

  void reset(int slots) {
    middle_slots = slots;
    rule_count = 0;
    required.clear();
  }

  std::int64_t req(int rule, int slot) const {
    return required[static_cast<std::size_t>(rule) *
                        static_cast<std::size_t>(middle_slots) +
                    static_cast<std::size_t>(slot)];
  }
};

// Candidate primes for |A0| = a0, |An| = an whose endpoint chord admits a
// single segment; per surviving prime the minimal middle valuations become
// required divisors p^t (capped at H+1).
inline void build_dumas_rules(int n, std::int64_t H, const PrimeSieve& sieve,
                              std::int64_t a0, std::int64_t an,
                              std::vector<std::int64_t>& primes,
                              PairRules& rules) {
  rules.reset(n - 1);
  primes.clear();
  if (a0 > 1) sieve.distinct_primes(a0, primes);
  if (an > 1) sieve.distinct_primes(an, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const std::int64_t p : primes) {
    if (rules.rule_count >= 32) break;
    const std::int64_t a0e = padic_exponent(a0, p);
    const std::int64_t ane = padic_exponent(an, p);
    if (std::gcd(static_cast<std::int64_t>(n), std::abs(ane - a0e)) != 1)
      continue;
    for (std::int64_t i = 1; i < n; ++i) {
      const std::int64_t t = ((n - i) * a0e + i * ane) / n + 1;
      std::int64_t req = 1;
      for (std::int64_t j = 0; j < t; ++j) {
        req *= p;
        if (req > H) {
          req = H + 1;
          break;
        }
      }
      rules.required.push_back(req);
    }
    ++rules.rule_count;
  }
}

// Candidate primes with v_p(|A0|) = 1 and p not dividing |An|; every middle
// slot then just needs divisibility by p.
inline void build_eisenstein_rules(int n, std::int64_t H, const PrimeSieve& sieve,
                                   std::int64_t a0, std::int64_t an,
                                   std::vector<std::int64_t>& primes,
                                   PairRules& rules) {
  (void)H;
  rules.reset(n - 1);
  primes.clear();
  if (a0 > 1) sieve.distinct_primes(a0, primes);
  for (const std::int64_t p : primes) {
    if (rules.rule_count >= 32) break;
    if ((a0 / p) % p == 0) continue;
    if (an % p == 0) continue;
    for (int i = 1; i < n; ++i) rules.required.push_back(p);
    ++rules.rule_count;
  }
}

// Weighted count of middle magnitude tuples in [0, H]^slots satisfying at
// least one rule at every slot; weight 2 per nonzero entry (its sign
// choices), 1 for zero. Subtrees with no live rule are pruned whole.
inline std::uint64_t count_weighted_middles(const PairRules& rules,
                                            std::uint32_t alive, int slot,
                                            std::int64_t H) {
  if (alive == 0) return 0;
  if (slot == rules.middle_slots) return 1;
  std::uint64_t total = count_weighted_middles(rules, alive, slot + 1, H);
  for (std::int64_t v = 1; v <= H; ++v) {
    std::uint32_t next = 0;
    for (std::uint32_t bits = alive; bits != 0; bits &= bits - 1) {
      const int rule = std::countr_zero(bits);
      if (v % rules.req(rule, slot) == 0) next |= 1u << rule;
    }
    if (next != 0) total += 2 * count_weighted_middles(rules, next, slot + 1, H);
  }
  return total;
}

enum class PairCriterion { dumas, eisenstein };

// Magnitude-class engine: |A0|, |An| in [1, H], middles in [0, H]; each
// class weighs 2^(number of nonzero coefficients) since the verdict depends
// only on absolute values. Work is partitioned over |An| ranges and merged
// in partition order, so results do not depend on the worker count.
inline BigUint symmetric_box_count(int n, std::int64_t H, PairCriterion criterion,
                                   const CensusOptions& options) {
  guard_enumeration_work(static_cast<long double>(H) * static_cast<long double>(H) *
                         std::pow(static_cast<long double>(H + 1), n - 1));
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  int partitions = options.partitions > 0 ? options.partitions : threads * 8;
  partitions = static_cast<int>(
      std::min<std::int64_t>(partitions, H));
  if (partitions < 1) partitions = 1;

  const PrimeSieve sieve(std::max<std::int64_t>(2, H));
  std::vector<BigUint> partial(static_cast<std::size_t>(partitions));
  std::atomic<int> next_partition{0};

  auto worker = [&]() {
    std::vector<std::int64_t> primes;
    PairRules rules;
    for (;;) {
      const int part = next_partition.fetch_add(1);
      if (part >= partitions) return;
      const std::int64_t lo = H * part / partitions + 1;
      const std::int64_t hi = H * (part + 1) / partitions;
      BigUint acc;
      for (std::int64_t an = lo; an <= hi; ++an) {
        for (std::int64_t a0 = 1; a0 <= H; ++a0) {
          if (criterion == PairCriterion::dumas)
            build_dumas_rules(n, H, sieve, a0, an, primes, rules);
          else
            build_eisenstein_rules(n, H, sieve, a0, an, primes, rules);
          if (rules.rule_count == 0) continue;
          const std::uint32_t alive =
              rules.rule_count >= 32 ? ~0u : (1u << rules.rule_count) - 1u;
          BigUint weighted(count_weighted_middles(rules, alive, 0, H));
          weighted *= 4;  // sign choices of A0 and An
          acc += weighted;
        }
      }
      partial[static_cast<std::size_t>(part)] = std::move(acc);
    }
  };

  const int worker_count = std::min(threads, partitions);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(worker_count > 1 ? worker_count : 0));
  if (worker_count <= 1) {
    worker();
  } else {
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BigUint total;
  for (const BigUint& p : partial) total += p;
  return total;
}

}  // namespace detail

// Exact count of degree-n tuples, all |Ai| <= H, An != 0, satisfying the
// single-segment criterion for at least one prime.
inline CensusResult count_dumas(int n, std::int64_t H,
                                const CensusOptions& options = {}) {
  detail::validate_polynomial_census(n, H);
  CensusResult result{n, H, CensusKind::dumas, {}, detail::polynomial_box_size(n, H)};
  result.count =
      options.engine == CountingEngine::naive
          ? detail::naive_box_count(
                n, H, [](const Polynomial& f) { return is_dumas(f).satisfied; })
          : detail::symmetric_box_count(n, H, detail::PairCriterion::dumas,
                                        options);
  return result;
}

inline CensusResult count_eisenstein(int n, std::int64_t H,
                                     const CensusOptions& options = {}) {
  detail::validate_polynomial_census(n, H);
  CensusResult result{n, H, CensusKind::eisenstein, {},
                      detail::polynomial_box_size(n, H)};
  result.count = options.engine == CountingEngine::naive
                     ? detail::naive_box_count(
                           n, H,
                           [](const Polynomial& f) {
                             return is_eisenstein(f).satisfied;
                           })
                     : detail::symmetric_box_count(
                           n, H, detail::PairCriterion::eisenstein, options);
  return result;
}

// Desk-scale irreducibility census over the same box, via the Kronecker
// test on primitive parts. Signs matter here, so the box is enumerated in
// full.
inline CensusResult count_irreducible(int n, std::int64_t H) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("count_irreducible: degree must be 2 or 3");
  if (H < 1 || H > 20)
    throw std::invalid_argument("count_irreducible: height must be in [1, 20]");
  CensusResult result{n, H, CensusKind::irreducible, {},
                      detail::polynomial_box_size(n, H)};
  result.count = detail::naive_box_count(
      n, H, [](const Polynomial& f) { return kronecker_irreducible(f); });
  return result;
}

// #{(a1..ak) in [1,H]^k : gcd > 1} = H^k - sum_d mu(d) floor(H/d)^k,
// accumulated as separate positive and negative parts.
inline CensusResult count_noncoprime_tuples(int k, std::int64_t H) {
  if (k < 2) throw std::invalid_argument("count_noncoprime_tuples: k must be >= 2");
  if (k > kMaxCensusDegree)
    throw std::invalid_argument("count_noncoprime_tuples: k exceeds supported range");
  if (H < 1 || H > kMaxCensusHeight)
    throw std::invalid_argument("count_noncoprime_tuples: height out of range");
  const std::vector<std::int8_t> mu = mobius_sieve(H);
  BigUint positive;
  BigUint negative;
  for (std::int64_t d = 1; d <= H; ++d) {
    if (mu[static_cast<std::size_t>(d)] == 0) continue;
    const BigUint term = BigUint::pow(static_cast<std::uint64_t>(H / d),
                                      static_cast<unsigned>(k));
    if (mu[static_cast<std::size_t>(d)] > 0)
      positive += term;
    else
      negative += term;
  }
  CensusResult result{k, H, CensusKind::coprime_tuples, {},
                      BigUint::pow(static_cast<std::uint64_t>(H),
                                   static_cast<unsigned>(k))};
  result.count = result.total + negative - positive;
  return result;
}

// Exact count of pairwise-coprime triples in [1,H]^3. For each coprime
// pair (a, b) the admissible c are counted by inclusion-exclusion over the
// (disjoint) prime sets of a and b; a plain cubic loop backs this in tests.
inline CensusResult count_pairwise_coprime_triples(std::int64_t H) {
  if (H < 1) throw std::invalid_argument("count_pairwise_coprime_triples: H < 1");
  if (H > kMaxPairwiseCoprimeHeight)
    throw std::invalid_argument(
        "count_pairwise_coprime_triples: height exceeds performance cap");
  const PrimeSieve sieve(std::max<std::int64_t>(2, H));
  std::vector<std::vector<std::int64_t>> prime_sets(
      static_cast<std::size_t>(H) + 1);
  for (std::int64_t v = 2; v <= H; ++v)
    sieve.distinct_primes(v, prime_sets[static_cast<std::size_t>(v)]);

  std::uint64_t count = 0;
  std::vector<std::int64_t> merged;
  for (std::int64_t a = 1; a <= H; ++a) {
    const auto& pa = prime_sets[static_cast<std::size_t>(a)];
    for (std::int64_t b = 1; b <= H; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto& pb = prime_sets[static_cast<std::size_t>(b)];
      merged.clear();
      merged.insert(merged.end(), pa.begin(), pa.end());
      merged.insert(merged.end(), pb.begin(), pb.end());
      std::int64_t admissible = 0;
      const std::uint32_t subsets = 1u << merged.size();
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::int64_t divisor = 1;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
          divisor *= merged[static_cast<std::size_t>(std::countr_zero(bits))];
        const std::int64_t term = H / divisor;
        admissible += (std::popcount(mask) % 2 == 0) ? term : -term;
      }
      count += static_cast<std::uint64_t>(admissible);
    }
  }
  CensusResult result{3, H, CensusKind::pairwise_coprime_triples, {},
                      BigUint::pow(static_cast<std::uint64_t>(H), 3)};
  result.count = BigUint(count);
  return result;
}

struct BoundCheck {
  int degree = 0;
  std::int64_t height = 0;
  BigUint dumas_count;
  BigUint bound;
  bool holds = false;
};

// Exact finite-height inequality behind the density bound: every
// single-segment polynomial either has all middle coefficients nonzero --
// and then its coefficients fail the relevant coprimality condition -- or
// has a zero middle coefficient. Both buckets are counted exactly.
inline BoundCheck dumas_upper_bound_check(int n, std::int64_t H,
                                          const CensusOptions& options = {}) {
  detail::validate_polynomial_census(n, H);
  BoundCheck out;
  out.degree = n;
  out.height = H;
  out.dumas_count = count_dumas(n, H, options).count;
  const std::uint64_t endpoint_choices =
      static_cast<std::uint64_t>(2 * H) * static_cast<std::uint64_t>(2 * H);
  if (n == 2) {
    // middle nonzero: some coefficient pair shares a factor (8 sign choices)
    BigUint shared = BigUint::pow(static_cast<std::uint64_t>(H), 3) -
                     count_pairwise_coprime_triples(H).count;
    shared *= 8;
    out.bound = shared + BigUint(endpoint_choices);
  } else {
    BigUint shared = count_noncoprime_tuples(n - 1, H).count;
    shared *= 1ull << (n - 1);  // middle sign choices
    shared = shared * BigUint(endpoint_choices);
    BigUint zero_middle = BigUint::pow(static_cast<std::uint64_t>(2 * H + 1),
                                       static_cast<unsigned>(n - 1)) -
                          BigUint::pow(static_cast<std::uint64_t>(2 * H),
                                       static_cast<unsigned>(n - 1));
    zero_middle = zero_middle * BigUint(endpoint_choices);
    out.bound = shared + zero_middle;
  }
  out.holds = !(out.dumas_count > out.bound);
  return out;
}

struct DensityReport {
  int degree = 0;
  std::int64_t height = 0;
  double dumas_density = 0.0;
  double eisenstein_density = 0.0;
  double tau_n = 0.0;
  double lower_n = 0.0;
};

// Empirical densities over the exact finite box next to the analytic
// constants they approach.
inline DensityReport density_report(int n, std::int64_t H,
                                    const CensusOptions& options = {}) {
  DensityReport report;
  report.degree = n;
  report.height = H;
  report.dumas_density = count_dumas(n, H, options).density();
  report.eisenstein_density = count_eisenstein(n, H, options).density();
  report.tau_n = tau(n);
  report.lower_n = eisenstein_lower(n);
  return report;
}

}  // namespace dumas
