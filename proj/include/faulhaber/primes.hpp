#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "faulhaber/exact.hpp"

namespace faulhaber {

/// Eratosthenes table over [0, limit]. Immutable after construction.
class PrimeSieve {
 public:
  /// Throws DomainError for limit < 2 or limit > kMaxLimit.
  explicit PrimeSieve(std::uint64_t limit);

  static constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 31;

  std::uint64_t limit() const { return limit_; }

  /// Throws DomainError if value > limit().
  bool is_prime(std::uint64_t value) const;

  /// Ascending list of every prime <= limit().
  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

/// Trial-division primality, for small arguments and validation.
bool is_prime_trial(std::uint64_t value);

/// All primes p with (p - 1) | k, ascending. k must be even and >= 2.
/// Only primes <= k + 1 can qualify, so the sieve bound is k + 1.
std::vector<std::uint64_t> vsc_primes(std::uint64_t k);

struct PrimePower {
  BigInt prime;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// p^a || n for every prime p | n, primes ascending.
struct Factorization {
  std::vector<PrimePower> factors;

  BigInt product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// The cofactor left after trial division to the budget is composite or
/// too large to certify as prime.
class UnfactoredError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

/// Trial division by every d <= bound. Throws DomainError for n < 2 and
/// UnfactoredError when a cofactor > 1 remains that cannot be certified prime
/// (i.e. it is >= (bound + 1)^2).
Factorization factorize(const BigInt& n, std::uint64_t bound = kDefaultFactorBound);

}  // namespace faulhaber
