#pragma once

// Deciding whether mu_k(n) = S_k(n)/n is an integer.
//
//   k = 1:       integral iff n is odd.
//   odd k >= 3:  integral iff n mod 4 != 2.
//   even k:      integral iff gcd(n, D_k) = 1, D_k = prod_{(p-1)|k} p.
//
// The even branch never factors n: one gcd against the square-free D_k,
// then the witness primes are read off by dividing the gcd by the few
// primes in vsc_primes(k).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <variant>
#include <vector>

#include "faulhaber/exact.hpp"

namespace faulhaber {

enum class Rule { KOne, OddK, EvenK };

std::string_view to_string(Rule rule);

struct NoObstruction {
  friend bool operator==(const NoObstruction&, const NoObstruction&) = default;
};
/// k = 1 and n even.
struct NEven {
  friend bool operator==(const NEven&, const NEven&) = default;
};
/// odd k >= 3 and n = 2 (mod 4).
struct NMod4IsTwo {
  friend bool operator==(const NMod4IsTwo&, const NMod4IsTwo&) = default;
};
/// even k: primes dividing both n and D_k, ascending.
struct SharedPrimes {
  std::vector<std::uint64_t> primes;
  friend bool operator==(const SharedPrimes&, const SharedPrimes&) = default;
};

using Witness = std::variant<NoObstruction, NEven, NMod4IsTwo, SharedPrimes>;

struct Verdict {
  bool integral = true;
  Rule rule = Rule::KOne;
  Witness witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// D_k and its prime list, per even k.
struct EvenKData {
  BigInt denominator;
  std::vector<std::uint64_t> primes;
};

/// Memo of EvenKData keyed by k. Safe for concurrent use; concurrent misses
/// on the same k may both compute, and the first insertion wins.
class DenominatorCache {
 public:
  std::shared_ptr<const EvenKData> get(std::uint64_t k);

  static DenominatorCache& global();

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, std::shared_ptr<const EvenKData>> entries_;
};

/// Throws DomainError for k < 1 or n < 1.
Verdict decide(std::uint64_t k, const BigInt& n);
Verdict decide(std::uint64_t k, const BigInt& n, DenominatorCache& cache);

/// sum_{m=1}^p m^k mod p by direct modular summation. Throws DomainError
/// unless p is prime.
std::uint64_t prime_block_sum(std::uint64_t p, std::uint64_t k);

struct ResiduePrediction {
  BigInt prime;
  std::uint32_t exponent = 0;  // a with p^a || n
  BigInt modulus;              // p^a
  BigInt predicted;            // in [0, p^a)
};

/// Predicted S_k(n) mod p^a for even k: 0 when (p-1) does not divide k,
/// otherwise (-n/p) mod p^a. Throws DomainError for odd k, n < 2, composite
/// p, or p not dividing n.
ResiduePrediction predict_residue(std::uint64_t k, const BigInt& n, std::uint64_t p);

/// decide(k, n) for 1 <= k <= kmax, 1 <= n <= nmax.
struct VerdictGrid {
  std::uint64_t kmax = 0;
  std::uint64_t nmax = 0;
  std::vector<Verdict> cells;  // row-major, k-1 then n-1
  /// D_k for even k; empty BigInt (0) for odd k.
  std::vector<BigInt> denominators;

  const Verdict& at(std::uint64_t k, std::uint64_t n) const {
    return cells[(k - 1) * nmax + (n - 1)];
  }
};

/// OpenMP over cells.
VerdictGrid grid(std::uint64_t kmax, std::uint64_t nmax);

/// Reference single-threaded grid.
VerdictGrid grid_serial(std::uint64_t kmax, std::uint64_t nmax);

}  // namespace faulhaber
