#pragma once

// Bernoulli numbers under the B_1 = -1/2 convention.
//
// Two independent routes produce full tables: the defining recursion
// (k+1) B_k = -sum_{j<k} C(k+1, j) B_j, and exact power-series division of
// x by the truncated e^x - 1. The denominators of even-index entries come
// from a third route, the product of primes p with (p-1) | k.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "faulhaber/exact.hpp"

namespace faulhaber {

enum class BernoulliRoute { Recursion, Egf };

std::string_view to_string(BernoulliRoute route);

/// B_0..B_K, immutable.
class BernoulliTable {
 public:
  BernoulliTable(BernoulliRoute route, std::vector<Rational> values);

  std::uint64_t max_index() const { return values_.size() - 1; }
  bool covers(std::uint64_t k) const { return k < values_.size(); }

  /// Throws DomainError if k > max_index().
  const Rational& at(std::uint64_t k) const;
  const Rational& operator[](std::uint64_t k) const { return values_[k]; }

  const std::vector<Rational>& values() const { return values_; }
  BernoulliRoute route() const { return route_; }

 private:
  BernoulliRoute route_;
  std::vector<Rational> values_;
};

BernoulliTable bernoulli_recursive(std::uint64_t max_index);
BernoulliTable bernoulli_egf(std::uint64_t max_index);

/// D_k = prod_{(p-1) | k} p for even k >= 2.
BigInt vsc_denominator(std::uint64_t k);

struct RegularityReport {
  std::uint64_t prime = 0;
  bool regular = true;
  /// Every even k in [2, p-3] with p | N_k.
  std::vector<std::uint64_t> offending_indices;
};

/// Kummer regularity for a prime p >= 5, using the shared table cache.
RegularityReport is_regular(std::uint64_t p);

inline constexpr std::uint64_t kDefaultBernoulliCap = 512;

/// Process-wide memo of the recursion table. Thread-safe; the table grows
/// monotonically and a returned pointer stays valid forever.
class BernoulliCache {
 public:
  explicit BernoulliCache(std::uint64_t cap = kDefaultBernoulliCap) : cap_(cap) {}

  /// Table covering at least index k. Throws DomainError if k > cap().
  std::shared_ptr<const BernoulliTable> get(std::uint64_t k);

  std::uint64_t cap() const { return cap_; }

  static BernoulliCache& global();

 private:
  std::uint64_t cap_;
  std::mutex mutex_;
  std::shared_ptr<const BernoulliTable> table_;
};

}  // namespace faulhaber
