#include "faulhaber/primes.hpp"

#include <string>

namespace faulhaber {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve limit must be >= 2");
  if (limit > kMaxLimit) throw DomainError("sieve limit exceeds " + std::to_string(kMaxLimit));
  composite_.assign(limit + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite_[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite_[q] = true;
  }
  for (std::uint64_t v = 2; v <= limit; ++v) {
    if (!composite_[v]) primes_.push_back(v);
  }
}

bool PrimeSieve::is_prime(std::uint64_t value) const {
  if (value > limit_) throw DomainError("query above sieve limit");
  return !composite_[value];
}

bool is_prime_trial(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d <= value / d; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> vsc_primes(std::uint64_t k) {
  if (k < 2 || k % 2 != 0) throw DomainError("k must be even and >= 2, got " + std::to_string(k));
  PrimeSieve sieve(k + 1);
  std::vector<std::uint64_t> out;
  for (auto p : sieve.primes()) {
    if (k % (p - 1) == 0) out.push_back(p);
  }
  return out;
}

BigInt Factorization::product() const {
  BigInt acc = 1;
  for (const auto& f : factors) acc *= pow(f.prime, f.exponent);
  return acc;
}

Factorization factorize(const BigInt& n, std::uint64_t bound) {
  if (n < 2) throw DomainError("factorize needs n >= 2, got " + to_string(n));
  Factorization out;
  BigInt rest = n;
  auto strip = [&](std::uint64_t d) {
    std::uint32_t a = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d)) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(d));
      ++a;
    }
    if (a > 0) out.factors.push_back({from_u64(d), a});
  };

  strip(2);
  std::uint64_t d = 3;
  for (; d <= bound; d += 2) {
    if (rest == 1) break;
    if (from_u64(d) * d > rest) break;
    strip(d);
  }
  if (rest > 1) {
    // Every prime below d has been removed, so rest is prime iff rest < d^2.
    if (rest >= from_u64(d) * d) {
      throw UnfactoredError("cofactor " + to_string(rest) + " of " + to_string(n) +
                            " exceeds the trial-division budget " + std::to_string(bound));
    }
    out.factors.push_back({rest, 1});
  }
  return out;
}

}  // namespace faulhaber
