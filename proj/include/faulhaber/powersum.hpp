#pragma once

// S_k(n) = 1^k + 2^k + ... + n^k by three independent routes, its residues,
// and the average mu_k(n) = S_k(n) / n.

#include <cstdint>
#include <string_view>
#include <vector>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/exact.hpp"

namespace faulhaber {

/// A validated (k, n) pair: k >= 1, n >= 1.
class PowerSumQuery {
 public:
  /// Throws DomainError for k == 0 or n == 0.
  PowerSumQuery(std::uint64_t k, std::uint64_t n);

  std::uint64_t k() const { return k_; }
  std::uint64_t n() const { return n_; }

 private:
  std::uint64_t k_;
  std::uint64_t n_;
};

enum class PowerSumRoute { Brute, Faulhaber, Recursive };

std::string_view to_string(PowerSumRoute route);
/// Accepts "brute", "faulhaber", "recursive".
PowerSumRoute parse_power_sum_route(std::string_view name);

/// Direct accumulation; the ground truth.
BigInt s_brute(const PowerSumQuery& q);

/// (k+1) S_k(n) = sum_{j=0}^k C(k+1, j) B_j (n+1)^{k+1-j}, evaluated in
/// rationals. Throws DomainError if the table does not cover k and
/// InconsistencyError if the result is not an integer.
BigInt s_faulhaber(const PowerSumQuery& q, const BernoulliTable& table);

/// Overload drawing on the process-wide Bernoulli cache.
BigInt s_faulhaber(const PowerSumQuery& q);

/// S_1(n)..S_kmax(n) from (n+1)^{k+1} = (n+1) + sum_{j=1}^k C(k+1, j) S_j(n),
/// solved bottom-up. Throws InconsistencyError if a division is inexact.
std::vector<BigInt> s_recursive(std::uint64_t kmax, std::uint64_t n);

/// S_k(n) mod m in [0, m), m >= 1, without forming S_k(n).
BigInt s_mod(const PowerSumQuery& q, const BigInt& m);

BigInt power_sum(const PowerSumQuery& q, PowerSumRoute route);

struct Average {
  Rational value;
  bool integral = false;

  friend bool operator==(const Average&, const Average&) = default;
};

/// mu_k(n) exactly. Uses the Faulhaber route when the cached Bernoulli
/// table can cover k, otherwise direct summation.
Average mu(const PowerSumQuery& q);
Average mu(const PowerSumQuery& q, PowerSumRoute route);

}  // namespace faulhaber
