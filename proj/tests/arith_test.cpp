#include "dumas/arith.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace {

using dumas::PrimeSieve;

// Independent plain Eratosthenes used as the oracle for sieve checks.
std::vector<std::int64_t> primes_oracle(std::int64_t limit) {
  std::vector<bool> is_prime(static_cast<std::size_t>(limit) + 1, true);
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (!is_prime[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p + p; q <= limit; q += p)
      is_prime[static_cast<std::size_t>(q)] = false;
  }
  return out;
}

// Divide-out-smallest-factor oracle for factorizations.
std::vector<std::int64_t> factor_oracle(std::int64_t value) {
  std::int64_t m = std::abs(value);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; m > 1; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  return out;
}

TEST(PrimeSieve, SmallPrimeLists) {
  EXPECT_EQ(PrimeSieve(10).primes(), (std::vector<std::int64_t>{2, 3, 5, 7}));
  EXPECT_EQ(PrimeSieve(2).primes(), (std::vector<std::int64_t>{2}));
}

TEST(PrimeSieve, PrimeCountTo100000) {
  EXPECT_EQ(PrimeSieve(100000).primes().size(), 9592u);
}

TEST(PrimeSieve, MatchesOracle) {
  const PrimeSieve sieve(5000);
  const auto expected = primes_oracle(5000);
  EXPECT_EQ(sieve.primes(), expected);
  for (std::int64_t k = 2; k <= 5000; ++k) {
    const std::int64_t f = sieve.smallest_factor(k);
    EXPECT_EQ(k % f, 0) << k;
    EXPECT_TRUE(sieve.is_prime(f)) << k;
    EXPECT_EQ(sieve.is_prime(k),
              std::binary_search(expected.begin(), expected.end(), k));
  }
}

TEST(PrimeSieve, RejectsBadLimits) {
  EXPECT_THROW(PrimeSieve(1), std::invalid_argument);
  EXPECT_THROW(PrimeSieve(-5), std::invalid_argument);
  EXPECT_THROW(PrimeSieve(dumas::kMaxSieveLimit + 1), std::invalid_argument);
}

TEST(Valuation, KnownValues) {
  const auto v1 = dumas::padic_valuation(12, 2);
  EXPECT_EQ(v1.exponent, 2);
  EXPECT_EQ(v1.unit, 3);
  const auto v2 = dumas::padic_valuation(-7, 7);
  EXPECT_EQ(v2.exponent, 1);
  EXPECT_EQ(v2.unit, -1);
  const auto v3 = dumas::padic_valuation(1, 3);
  EXPECT_EQ(v3.exponent, 0);
  EXPECT_EQ(v3.unit, 1);
}

TEST(Valuation, ZeroIsDomainError) {
  EXPECT_THROW(dumas::padic_valuation(0, 2), std::domain_error);
}

TEST(Valuation, ReconstructsInput) {
  std::mt19937_64 rng(7);
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int round = 0; round < 5000; ++round) {
    const std::int64_t a = dist(rng);
    if (a == 0) continue;
    const std::int64_t p = primes[rng() % 6];
    const auto v = dumas::padic_valuation(a, p);
    EXPECT_NE(v.unit % p, 0);
    std::int64_t rebuilt = v.unit;
    for (int e = 0; e < v.exponent; ++e) rebuilt *= p;
    EXPECT_EQ(rebuilt, a);
    EXPECT_EQ((a < 0), (v.unit < 0));
  }
}

TEST(PrimeDivisors, KnownValues) {
  EXPECT_EQ(dumas::prime_divisors(36), (std::vector<std::int64_t>{2, 3}));
  EXPECT_TRUE(dumas::prime_divisors(-1).empty());
  EXPECT_TRUE(dumas::prime_divisors(1).empty());
  EXPECT_EQ(dumas::prime_divisors(9991), (std::vector<std::int64_t>{97, 103}));
  EXPECT_THROW(dumas::prime_divisors(0), std::domain_error);
}

TEST(PrimeDivisors, MatchesFactorOracle) {
  for (std::int64_t v = 2; v <= 3000; ++v)
    EXPECT_EQ(dumas::prime_divisors(v), factor_oracle(v)) << v;
}

TEST(PrimeDivisors, ProductIsUnionOfFactors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(1, 100000);
  for (int round = 0; round < 2000; ++round) {
    const std::int64_t a = dist(rng);
    const std::int64_t b = dist(rng);
    const auto pa = dumas::prime_divisors(a);
    const auto pb = dumas::prime_divisors(b);
    std::set<std::int64_t> expected(pa.begin(), pa.end());
    expected.insert(pb.begin(), pb.end());
    const auto pab = dumas::prime_divisors(a * b);
    EXPECT_EQ(std::vector<std::int64_t>(expected.begin(), expected.end()), pab);
  }
}

TEST(PrimeDivisors, SieveBackedAgreesWithTrialDivision) {
  const PrimeSieve sieve(1000);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> dist(-500000, 500000);
  for (int round = 0; round < 2000; ++round) {
    const std::int64_t a = dist(rng);
    if (a == 0) continue;
    EXPECT_EQ(dumas::prime_divisors(a, sieve), dumas::prime_divisors(a));
  }
}

TEST(Mobius, KnownValues) {
  const auto mu = dumas::mobius_sieve(30);
  EXPECT_EQ(mu[1], 1);
  EXPECT_EQ(mu[2], -1);
  EXPECT_EQ(mu[4], 0);
  EXPECT_EQ(mu[6], 1);
  EXPECT_EQ(mu[30], -1);
  int sum = 0;
  for (int d = 1; d <= 10; ++d) sum += mu[d];
  EXPECT_EQ(sum, -1);
}

TEST(Mobius, MatchesDefinitionTo10000) {
  const auto mu = dumas::mobius_sieve(10000);
  for (std::int64_t d = 1; d <= 10000; ++d) {
    // definition: 0 on a squared factor, else parity of the factor count
    std::int64_t m = d;
    int factors = 0;
    bool squarefree = true;
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      m /= p;
      ++factors;
      if (m % p == 0) {
        squarefree = false;
        break;
      }
    }
    if (m > 1) ++factors;
    const int expected = squarefree ? (factors % 2 == 0 ? 1 : -1) : 0;
    EXPECT_EQ(mu[static_cast<std::size_t>(d)], expected) << d;
  }
}

TEST(Mobius, RejectsBadLimit) {
  EXPECT_THROW(dumas::mobius_sieve(0), std::invalid_argument);
}

TEST(GcdAll, KnownValues) {
  const std::vector<std::int64_t> a{4, 6, 10};
  const std::vector<std::int64_t> b{3, 5};
  const std::vector<std::int64_t> c{0, 7};
  const std::vector<std::int64_t> zeros{0, 0, 0};
  EXPECT_EQ(dumas::gcd_all(a), 2);
  EXPECT_EQ(dumas::gcd_all(b), 1);
  EXPECT_EQ(dumas::gcd_all(c), 7);
  EXPECT_EQ(dumas::gcd_all(zeros), 0);
  EXPECT_THROW(dumas::gcd_all(std::span<const std::int64_t>{}),
               std::invalid_argument);
}

TEST(GcdAll, PermutationAndSignInvariant) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> dist(-500, 500);
  for (int round = 0; round < 1000; ++round) {
    std::vector<std::int64_t> values(2 + rng() % 5);
    for (auto& v : values) v = dist(rng);
    const std::int64_t g = dumas::gcd_all(values);
    std::vector<std::int64_t> shuffled = values;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& v : shuffled)
      if (rng() % 2) v = -v;
    EXPECT_EQ(dumas::gcd_all(shuffled), g);
  }
}

TEST(PairwiseCoprime, KnownValues) {
  EXPECT_TRUE(dumas::pairwise_coprime(2, 3, 5));
  EXPECT_FALSE(dumas::pairwise_coprime(2, 3, 4));
  EXPECT_TRUE(dumas::pairwise_coprime(1, 1, 1));
}

}  // namespace
