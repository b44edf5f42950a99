#pragma once

// Summation kernels behind the power-sum routes.
//
// `serial` holds the reference implementations: straight loops, no
// threading, used as oracles in tests and as the baseline in benchmarks.
// `omp` holds the OpenMP versions used by the public API. Both accept a
// Deadline; a kernel that runs past it returns std::nullopt.

#include <chrono>
#include <cstdint>
#include <optional>

#include "faulhaber/exact.hpp"

namespace faulhaber::kernels {

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline none() { return Deadline(); }
  static Deadline after(std::chrono::milliseconds budget) {
    return Deadline(Clock::now() + budget);
  }

  bool expired() const { return at_.has_value() && Clock::now() >= *at_; }
  bool bounded() const { return at_.has_value(); }

 private:
  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}

  std::optional<Clock::time_point> at_;
};

namespace serial {

/// sum_{j=1}^n j^k exactly.
std::optional<BigInt> power_sum(std::uint64_t k, std::uint64_t n,
                                Deadline deadline = Deadline::none());

/// sum_{j=1}^n j^k mod m with BigInt modpow per term; any m >= 1.
std::optional<BigInt> power_sum_mod(std::uint64_t k, std::uint64_t n, const BigInt& m,
                                    Deadline deadline = Deadline::none());

/// Same sum in 64-bit modular arithmetic; m >= 1.
std::optional<std::uint64_t> power_sum_mod_u64(std::uint64_t k, std::uint64_t n, std::uint64_t m,
                                               Deadline deadline = Deadline::none());

}  // namespace serial

namespace omp {

std::optional<BigInt> power_sum(std::uint64_t k, std::uint64_t n,
                                Deadline deadline = Deadline::none());

std::optional<std::uint64_t> power_sum_mod_u64(std::uint64_t k, std::uint64_t n, std::uint64_t m,
                                               Deadline deadline = Deadline::none());

}  // namespace omp

/// Terms per work item; the deadline is polled once per chunk.
inline constexpr std::uint64_t kChunk = 4096;

}  // namespace faulhaber::kernels
