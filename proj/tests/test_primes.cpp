#include "faulhaber/primes.hpp"

#include <set>

#include <gtest/gtest.h>

using namespace faulhaber;

namespace {

// Independent oracle: primes p <= k + 1 with (p - 1) | k by trial division.
std::vector<std::uint64_t> vsc_by_trial(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= k + 1; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime && k % (p - 1) == 0) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Sieve, SmallLimits) {
  EXPECT_EQ(PrimeSieve(10).primes(), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(PrimeSieve(2).primes(), (std::vector<std::uint64_t>{2}));
}

TEST(Sieve, CountToHundredMatchesTrialDivision) {
  std::size_t trial = 0;
  for (std::uint64_t v = 2; v <= 100; ++v) {
    bool prime = true;
    for (std::uint64_t d = 2; d < v; ++d) prime = prime && v % d != 0;
    trial += prime ? 1 : 0;
  }
  ASSERT_EQ(trial, 25U);
  EXPECT_EQ(PrimeSieve(100).primes().size(), trial);
}

TEST(Sieve, AgreesWithTrialDivision) {
  PrimeSieve sieve(5000);
  for (std::uint64_t v = 0; v <= 5000; ++v) ASSERT_EQ(sieve.is_prime(v), is_prime_trial(v)) << v;
}

TEST(Sieve, Errors) {
  EXPECT_THROW(PrimeSieve(1), DomainError);
  EXPECT_THROW(PrimeSieve(0), DomainError);
  EXPECT_THROW(PrimeSieve(10).is_prime(11), DomainError);
}

TEST(VscPrimes, Examples) {
  EXPECT_EQ(vsc_primes(2), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(vsc_primes(4), (std::vector<std::uint64_t>{2, 3, 5}));
  const std::vector<std::uint64_t> twelve{2, 3, 5, 7, 13};
  ASSERT_EQ(vsc_by_trial(12), twelve);
  EXPECT_EQ(vsc_primes(12), twelve);
}

TEST(VscPrimes, RejectsOddOrSmallK) {
  EXPECT_THROW(vsc_primes(0), DomainError);
  EXPECT_THROW(vsc_primes(1), DomainError);
  EXPECT_THROW(vsc_primes(7), DomainError);
}

TEST(VscPrimes, AgreesWithTrialOracleAndIsSquareFree) {
  for (std::uint64_t k = 2; k <= 200; k += 2) {
    const auto primes = vsc_primes(k);
    ASSERT_EQ(primes, vsc_by_trial(k)) << k;
    ASSERT_EQ(std::set<std::uint64_t>(primes.begin(), primes.end()).size(), primes.size());
    ASSERT_GE(primes.size(), 2U);
    EXPECT_EQ(primes[0], 2U);
    EXPECT_EQ(primes[1], 3U);
  }
}

TEST(VscPrimes, DivisorMonotonicity) {
  for (std::uint64_t k = 2; k <= 40; k += 2) {
    const auto base = vsc_primes(k);
    for (std::uint64_t m = 1; m <= 10; ++m) {
      const auto wider = vsc_primes(m * k);
      const std::set<std::uint64_t> w(wider.begin(), wider.end());
      for (auto p : base) ASSERT_TRUE(w.contains(p)) << "k=" << k << " m=" << m << " p=" << p;
    }
  }
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(97).factors, (std::vector<PrimePower>{{97, 1}}));
  EXPECT_EQ(factorize(2730).factors,
            (std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {13, 1}}));
}

TEST(Factorize, ReassemblesAndOrders) {
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const auto f = factorize(from_u64(n));
    ASSERT_EQ(f.product(), from_u64(n));
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_GE(f.factors[i].exponent, 1U);
      ASSERT_TRUE(is_prime_trial(to_u64(f.factors[i].prime)));
      if (i > 0) ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(Factorize, LargePrimeCofactorWithinBudget) {
  // 999983 is prime; the cofactor is below (bound + 1)^2 so it is certified.
  const BigInt n = BigInt(8) * 999983;
  EXPECT_EQ(factorize(n, 1000).factors, (std::vector<PrimePower>{{2, 3}, {999983, 1}}));
}

TEST(Factorize, OverBudgetIsAnExplicitError) {
  // Product of two primes above the bound.
  const BigInt n = BigInt(1000003) * 1000033;
  EXPECT_THROW(factorize(n, 1000), UnfactoredError);
  EXPECT_EQ(factorize(n, 1'001'000).product(), n);
}

TEST(Factorize, RejectsSmallInput) {
  EXPECT_THROW(factorize(1), DomainError);
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(-6), DomainError);
}
