#include "faulhaber/selftest.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/integrality.hpp"
#include "faulhaber/kernels.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/primes.hpp"

namespace faulhaber {

bool SelfTestReport::all_passed() const {
  for (const auto& g : groups) {
    if (!g.passed) return false;
  }
  return true;
}

namespace {

using Failure = std::optional<std::string>;
using u64 = std::uint64_t;

std::string at(u64 k, u64 n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

struct Ranges {
  u64 pascal_n, sieve_limit, sqfree_k, factor_n, route_k, three_k, three_n;
  u64 oracle_k, oracle_n, residue_k, residue_n, irregular_below;
};

Ranges ranges_for(bool quick) {
  if (quick) return {32, 200, 60, 2000, 20, 6, 20, 12, 100, 8, 60, 60};
  return {64, 1000, 200, 10000, 40, 12, 60, 30, 500, 12, 200, 100};
}

Failure rational_canonical() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    long den = dist(rng);
    if (den == 0) den = 1;
    const long num = dist(rng);
    Rational r = reduce(num, den);
    if (r.den() <= 0 || gcd(abs(r.num()), r.den()) != 1) return "non-canonical " + r.str();
    if (r * Rational(den) != Rational(num)) return "value changed: " + r.str();
  }
  return std::nullopt;
}

Failure pascal(u64 limit) {
  for (u64 n = 1; n <= limit; ++n) {
    for (u64 j = 1; j <= n; ++j) {
      if (binomial(n, j) != binomial(n - 1, j - 1) + binomial(n - 1, j)) {
        return "C(" + std::to_string(n) + "," + std::to_string(j) + ")";
      }
    }
  }
  return std::nullopt;
}

Failure modpow_exact() {
  for (long b = 0; b <= 12; ++b) {
    for (u64 e = 0; e <= 12; ++e) {
      for (long m = 1; m <= 100; ++m) {
        if (modpow(b, e, m) != pow(BigInt(b), e) % m) {
          return "b=" + std::to_string(b) + " e=" + std::to_string(e) + " m=" + std::to_string(m);
        }
      }
    }
  }
  return std::nullopt;
}

Failure sieve_vs_trial(u64 limit) {
  PrimeSieve sieve(limit);
  for (u64 v = 0; v <= limit; ++v) {
    if (sieve.is_prime(v) != is_prime_trial(v)) return "v=" + std::to_string(v);
  }
  return std::nullopt;
}

Failure square_free(u64 kmax) {
  for (u64 k = 2; k <= kmax; k += 2) {
    auto primes = vsc_primes(k);
    std::set<u64> unique(primes.begin(), primes.end());
    if (unique.size() != primes.size()) return "repeated prime at k=" + std::to_string(k);
    BigInt d = vsc_denominator(k);
    for (auto p : primes) {
      if (d % (from_u64(p) * p) == 0) return "p^2 | D_k at k=" + std::to_string(k);
    }
    if (primes.front() != 2 || primes[1] != 3) return "2, 3 missing at k=" + std::to_string(k);
  }
  return std::nullopt;
}

Failure divisor_monotonicity() {
  for (u64 k = 2; k <= 40; k += 2) {
    auto base = vsc_primes(k);
    for (u64 m = 1; m <= 8; ++m) {
      auto wider = vsc_primes(m * k);
      std::set<u64> w(wider.begin(), wider.end());
      for (auto p : base) {
        if (!w.contains(p)) return "k=" + std::to_string(k) + " m=" + std::to_string(m);
      }
    }
  }
  return std::nullopt;
}

Failure factor_reassembly(u64 limit) {
  for (u64 n = 2; n <= limit; ++n) {
    auto f = factorize(from_u64(n));
    if (f.product() != from_u64(n)) return "n=" + std::to_string(n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      if (f.factors[i].exponent < 1 || (i > 0 && f.factors[i - 1].prime >= f.factors[i].prime)) {
        return "order at n=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

Failure route_equivalence(u64 kmax, InjectedFault fault) {
  auto rec = bernoulli_recursive(kmax);
  auto egf = bernoulli_egf(kmax);
  auto values = egf.values();
  if (fault == InjectedFault::EgfRoute) values[std::min<u64>(kmax, 10)] += Rational(1);
  for (u64 k = 0; k <= kmax; ++k) {
    if (rec[k] != values[k]) return "B_" + std::to_string(k) + ": " + rec[k].str() + " vs " + values[k].str();
  }
  return std::nullopt;
}

Failure odd_vanishing() {
  auto rec = bernoulli_recursive(49);
  auto egf = bernoulli_egf(49);
  for (u64 m = 1; m <= 24; ++m) {
    if (!rec[2 * m + 1].is_zero() || !egf[2 * m + 1].is_zero()) return "B_" + std::to_string(2 * m + 1);
  }
  return std::nullopt;
}

Failure von_staudt_clausen() {
  auto rec = bernoulli_recursive(60);
  for (u64 k = 2; k <= 60; k += 2) {
    BigInt d = vsc_denominator(k);
    if (rec[k].den() != d) return "k=" + std::to_string(k);
    if (gcd(rec[k].num(), d) != 1) return "numerator shares a factor at k=" + std::to_string(k);
  }
  return std::nullopt;
}

Failure irregular(u64 below) {
  std::vector<u64> found;
  for (u64 p = 5; p < below; ++p) {
    if (is_prime_trial(p) && !is_regular(p).regular) found.push_back(p);
  }
  std::vector<u64> expected;
  for (u64 p : {37, 59, 67}) {
    if (p < below) expected.push_back(p);
  }
  if (found != expected) {
    std::string s;
    for (auto p : found) s += std::to_string(p) + " ";
    return "found " + s;
  }
  return std::nullopt;
}

Failure three_route(u64 kmax, u64 nmax) {
  auto table = bernoulli_recursive(kmax);
  for (u64 n = 1; n <= nmax; ++n) {
    auto rec = s_recursive(kmax, n);
    for (u64 k = 1; k <= kmax; ++k) {
      PowerSumQuery q(k, n);
      BigInt brute = s_brute(q);
      if (brute != s_faulhaber(q, table) || brute != rec[k - 1]) return at(k, n);
    }
  }
  return std::nullopt;
}

Failure telescoping() {
  for (u64 k = 1; k <= 10; ++k) {
    for (u64 n = 2; n <= 50; ++n) {
      if (s_brute({k, n}) - s_brute({k, n - 1}) != pow(from_u64(n), k)) return at(k, n);
    }
  }
  return std::nullopt;
}

Failure modular_consistency() {
  for (u64 k = 1; k <= 8; ++k) {
    for (u64 n = 1; n <= 40; ++n) {
      BigInt exact = s_brute({k, n});
      for (long m = 2; m <= 30; ++m) {
        if (s_mod({k, n}, m) != exact % m) return at(k, n) + " m=" + std::to_string(m);
      }
    }
  }
  return std::nullopt;
}

Failure closed_forms() {
  for (u64 n = 1; n <= 30; ++n) {
    const BigInt x = from_u64(n);
    const Rational forms[4] = {
        Rational(x + 1, 2),
        Rational((x + 1) * (2 * x + 1), 6),
        Rational(x * (x + 1) * (x + 1), 4),
        Rational((x + 1) * (2 * x + 1) * (3 * x * x + 3 * x - 1), 30),
    };
    for (u64 k = 1; k <= 4; ++k) {
      if (mu({k, n}).value != forms[k - 1]) return at(k, n);
    }
  }
  return std::nullopt;
}

Failure theorem_vs_oracle(u64 kmax, u64 nmax) {
  for (u64 k = 1; k <= kmax; ++k) {
    for (u64 n = 1; n <= nmax; ++n) {
      PowerSumQuery q(k, n);
      const bool by_residue = s_mod(q, from_u64(n)) == 0;
      if (decide(k, from_u64(n)).integral != by_residue) return at(k, n);
      if (n <= 60 && mu(q).integral != by_residue) return "mu " + at(k, n);
    }
  }
  return std::nullopt;
}

Failure fact_two() {
  for (u64 p = 2; p <= 47; ++p) {
    if (!is_prime_trial(p)) continue;
    for (u64 k = 1; k <= 50; ++k) {
      const u64 expected = k % (p - 1) == 0 ? p - 1 : 0;
      if (prime_block_sum(p, k) != expected) return "p=" + std::to_string(p) + " k=" + std::to_string(k);
    }
  }
  return std::nullopt;
}

Failure lemma() {
  for (u64 p : {2, 3, 5}) {
    for (u64 a = 1; a <= 3; ++a) {
      const BigInt pa = pow(from_u64(p), a);
      for (u64 k = 1; k <= 20; ++k) {
        if (k % (p - 1) == 0) continue;
        if (s_mod({k, to_u64(pa)}, pa) != 0) return "p=" + std::to_string(p) + " a=" + std::to_string(a) + " k=" + std::to_string(k);
      }
    }
  }
  return std::nullopt;
}

Failure residue_prediction(u64 kmax, u64 nmax, InjectedFault fault) {
  for (u64 k = 2; k <= kmax; k += 2) {
    for (u64 n = 2; n <= nmax; ++n) {
      for (const auto& f : factorize(from_u64(n)).factors) {
        auto pred = predict_residue(k, from_u64(n), to_u64(f.prime));
        if (fault == InjectedFault::ResiduePrediction) pred.predicted = (pred.predicted + 1) % pred.modulus;
        if (s_mod({k, n}, pred.modulus) != pred.predicted) {
          return at(k, n) + " p=" + to_string(f.prime);
        }
      }
    }
  }
  return std::nullopt;
}

Failure denominator_equivalence() {
  for (u64 k1 = 2; k1 <= 60; k1 += 2) {
    for (u64 k2 = k1 + 2; k2 <= 60; k2 += 2) {
      if (vsc_denominator(k1) != vsc_denominator(k2)) continue;
      for (u64 n = 1; n <= 200; ++n) {
        if (decide(k1, from_u64(n)) != decide(k2, from_u64(n))) {
          return "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) + " n=" + std::to_string(n);
        }
      }
    }
  }
  return std::nullopt;
}

Failure periodicity() {
  for (u64 k = 1; k <= 12; ++k) {
    const BigInt period = k % 2 == 0 ? BigInt(4 * vsc_denominator(k)) : BigInt(4);
    for (u64 n = 1; n <= 60; ++n) {
      if (decide(k, from_u64(n)) != decide(k, from_u64(n) + period)) return at(k, n);
    }
  }
  return std::nullopt;
}

Failure serial_vs_parallel() {
  if (grid(16, 120).cells != grid_serial(16, 120).cells) return "grid";
  for (u64 k : {1, 5, 12}) {
    for (u64 n : {1, 4095, 4096, 4097, 20000}) {
      if (kernels::omp::power_sum(k, n) != kernels::serial::power_sum(k, n)) return "power_sum " + at(k, n);
      for (u64 m : {1ULL, 97ULL, 1ULL << 40}) {
        if (kernels::omp::power_sum_mod_u64(k, n, m) != kernels::serial::power_sum_mod_u64(k, n, m)) {
          return "power_sum_mod " + at(k, n) + " m=" + std::to_string(m);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SelfTestReport run_selftest(const SelfTestOptions& options) {
  const Ranges r = ranges_for(options.quick);
  const std::vector<std::pair<std::string, std::function<Failure()>>> groups = {
      {"exact.rational-canonical", rational_canonical},
      {"exact.pascal", [&] { return pascal(r.pascal_n); }},
      {"exact.modpow", modpow_exact},
      {"primes.sieve-vs-trial", [&] { return sieve_vs_trial(r.sieve_limit); }},
      {"primes.square-free", [&] { return square_free(r.sqfree_k); }},
      {"primes.divisor-monotonicity", divisor_monotonicity},
      {"primes.factorize-reassembly", [&] { return factor_reassembly(r.factor_n); }},
      {"bernoulli.route-equivalence", [&] { return route_equivalence(r.route_k, options.fault); }},
      {"bernoulli.odd-vanishing", odd_vanishing},
      {"bernoulli.von-staudt-clausen", von_staudt_clausen},
      {"bernoulli.irregular-primes", [&] { return irregular(r.irregular_below); }},
      {"powersum.three-route", [&] { return three_route(r.three_k, r.three_n); }},
      {"powersum.telescoping", telescoping},
      {"powersum.modular-consistency", modular_consistency},
      {"powersum.closed-forms", closed_forms},
      {"integrality.theorem-vs-oracle", [&] { return theorem_vs_oracle(r.oracle_k, r.oracle_n); }},
      {"integrality.block-sum", fact_two},
      {"integrality.prime-power-lemma", lemma},
      {"integrality.residue-prediction",
       [&] { return residue_prediction(r.residue_k, r.residue_n, options.fault); }},
      {"integrality.denominator-equivalence", denominator_equivalence},
      {"integrality.periodicity", periodicity},
      {"kernels.serial-vs-parallel", serial_vs_parallel},
  };

  SelfTestReport report;
  for (const auto& [name, run] : groups) {
    SelfTestGroup g;
    g.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      Failure failure = run();
      g.passed = !failure.has_value();
      if (failure) g.detail = *failure;
    } catch (const std::exception& e) {
      g.passed = false;
      g.detail = std::string("exception: ") + e.what();
    }
    g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.groups.push_back(std::move(g));
  }
  return report;
}

}  // namespace faulhaber
