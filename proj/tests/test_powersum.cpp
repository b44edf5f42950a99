#include "faulhaber/powersum.hpp"

#include <gtest/gtest.h>

using namespace faulhaber;

namespace {

BigInt exact_sum(std::uint64_t k, std::uint64_t n) {
  BigInt acc = 0;
  for (std::uint64_t j = 1; j <= n; ++j) acc += pow(from_u64(j), k);
  return acc;
}

}  // namespace

TEST(PowerSumQuery, Validation) {
  EXPECT_THROW(PowerSumQuery(0, 5), DomainError);
  EXPECT_THROW(PowerSumQuery(2, 0), DomainError);
  EXPECT_NO_THROW(PowerSumQuery(1, 1));
}

TEST(SBrute, Examples) {
  EXPECT_EQ(s_brute({2, 4}), 30);
  EXPECT_EQ(s_brute({1, 100}), 5050);
  EXPECT_EQ(s_brute({3, 3}), 36);
}

TEST(SFaulhaber, Examples) {
  ASSERT_EQ(exact_sum(2, 4), 30);
  EXPECT_EQ(s_faulhaber({2, 4}), 30);
  EXPECT_EQ(s_faulhaber({4, 2}), 17);
  EXPECT_EQ(s_faulhaber({1, 10}), 55);
}

TEST(SFaulhaber, TableMustCoverK) {
  const auto t = bernoulli_recursive(3);
  EXPECT_THROW(s_faulhaber({4, 2}, t), DomainError);
}

TEST(SFaulhaber, CorruptTableIsReportedAsInconsistency) {
  auto values = bernoulli_recursive(4).values();
  values[2] = Rational(1, 5);
  const BernoulliTable broken(BernoulliRoute::Recursion, values);
  EXPECT_THROW(s_faulhaber({2, 3}, broken), InconsistencyError);
}

TEST(SRecursive, Examples) {
  EXPECT_EQ(s_recursive(1, 4), std::vector<BigInt>{10});
  ASSERT_EQ(exact_sum(1, 4), 10);
  ASSERT_EQ(exact_sum(2, 4), 30);
  EXPECT_EQ(s_recursive(2, 4), (std::vector<BigInt>{10, 30}));
  EXPECT_EQ(s_recursive(4, 1), (std::vector<BigInt>{1, 1, 1, 1}));
  EXPECT_THROW(s_recursive(0, 4), DomainError);
}

TEST(PowerSum, ThreeRoutesAgreeOnGrid) {
  const auto table = bernoulli_recursive(12);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto rec = s_recursive(12, n);
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const PowerSumQuery q(k, n);
      const BigInt truth = exact_sum(k, n);
      ASSERT_EQ(s_brute(q), truth) << k << " " << n;
      ASSERT_EQ(s_faulhaber(q, table), truth) << k << " " << n;
      ASSERT_EQ(rec[k - 1], truth) << k << " " << n;
    }
  }
}

TEST(PowerSum, LargeExponentAgreement) {
  for (std::uint64_t k : {100, 257, 512}) {
    const PowerSumQuery q(k, 37);
    EXPECT_EQ(s_faulhaber(q), s_brute(q));
    EXPECT_EQ(s_recursive(k, 37).back(), s_brute(q));
  }
}

TEST(PowerSum, Telescoping) {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    for (std::uint64_t n = 2; n <= 50; ++n) {
      ASSERT_EQ(s_brute({k, n}) - s_brute({k, n - 1}), pow(from_u64(n), k));
    }
  }
}

TEST(SMod, Examples) {
  EXPECT_EQ(s_mod({2, 4}, 4), 30 % 4);
  ASSERT_EQ(exact_sum(3, 6), 441);
  EXPECT_EQ(s_mod({3, 6}, 6), 3);
  EXPECT_EQ(s_mod({2, 5}, 5), 0);
}

TEST(SMod, ConsistentWithExactSum) {
  for (std::uint64_t k = 1; k <= 8; ++k) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const BigInt s = s_brute({k, n});
      for (long m = 2; m <= 30; ++m) ASSERT_EQ(s_mod({k, n}, m), s % m);
    }
  }
}

TEST(SMod, HugeModulusUsesBigIntPath) {
  const BigInt m = pow(BigInt(10), 30) + 7;
  EXPECT_EQ(s_mod({5, 1000}, m), s_brute({5, 1000}) % m);
  EXPECT_THROW(s_mod({5, 10}, 0), DomainError);
}

TEST(Mu, Examples) {
  const Average a = mu({1, 3});
  EXPECT_EQ(a.value, Rational(2));
  EXPECT_TRUE(a.integral);

  const Average b = mu({3, 2});
  EXPECT_EQ(b.value.str(), "9/2");
  EXPECT_FALSE(b.integral);

  const Average c = mu({2, 5});
  EXPECT_EQ(c.value, Rational(11));
  EXPECT_TRUE(c.integral);
}

TEST(Mu, NEqualsOneAlwaysIntegral) {
  for (std::uint64_t k = 1; k <= 40; ++k) EXPECT_EQ(mu({k, 1}).value, Rational(1));
}

TEST(Mu, ClosedFormsForSmallK) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const BigInt x = from_u64(n);
    EXPECT_EQ(mu({1, n}).value, Rational(x + 1, 2));
    EXPECT_EQ(mu({2, n}).value * Rational(6), Rational((x + 1) * (2 * x + 1)));
    EXPECT_EQ(mu({3, n}).value, Rational(x * (x + 1) * (x + 1), 4));
    EXPECT_EQ(mu({4, n}).value * Rational(30),
              Rational((x + 1) * (2 * x + 1) * (3 * x * x + 3 * x - 1)));
  }
}

TEST(Mu, RoutesAgreeAndMatchResidueCriterion) {
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (std::uint64_t n = 1; n <= 80; ++n) {
      const PowerSumQuery q(k, n);
      const Average a = mu(q);
      ASSERT_EQ(a, mu(q, PowerSumRoute::Brute));
      ASSERT_EQ(a, mu(q, PowerSumRoute::Recursive));
      ASSERT_EQ(a.integral, s_mod(q, from_u64(n)) == 0) << k << " " << n;
    }
  }
}

TEST(Route, NamesRoundTrip) {
  for (auto r : {PowerSumRoute::Brute, PowerSumRoute::Faulhaber, PowerSumRoute::Recursive}) {
    EXPECT_EQ(parse_power_sum_route(to_string(r)), r);
  }
  EXPECT_THROW(parse_power_sum_route("all"), DomainError);
}
