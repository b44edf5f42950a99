#pragma once

// Timing comparison of three ways to answer "is mu_k(n) an integer?":
// the theorem-based decide(), residue summation s_mod(q, n), and exact
// summation s_brute(q). Summations run under a per-cell time budget and are
// marked infeasible when they exceed it.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace faulhaber {

struct BenchCase {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
};

struct BenchConfig {
  std::chrono::milliseconds budget{5000};
  std::vector<BenchCase> cases = default_cases();

  static std::vector<BenchCase> default_cases();
};

enum class BenchMethod { Decide, SMod, Brute };

std::string to_string(BenchMethod method);

struct BenchCell {
  BenchMethod method = BenchMethod::Decide;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  bool completed = false;  // false: exceeded the budget
  double millis = 0;       // elapsed time, or time until abandoned
  std::optional<bool> integral;
};

struct BenchReport {
  std::vector<BenchCell> cells;
  std::chrono::milliseconds budget{0};
  /// Every completed summation agreed with decide().
  bool consistent = true;

  const BenchCell* find(BenchMethod method, std::uint64_t k, std::uint64_t n) const;

  /// s_mod time over decide time for (k, n). When s_mod was abandoned the
  /// budget is used, so the value is a lower bound.
  std::optional<double> speedup(std::uint64_t k, std::uint64_t n) const;
};

BenchReport run_bench(const BenchConfig& config);

}  // namespace faulhaber
