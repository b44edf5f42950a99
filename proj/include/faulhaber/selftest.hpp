#pragma once

#include <string>
#include <vector>

namespace faulhaber {

/// Deliberate corruption used to prove a group can fail.
enum class InjectedFault { None, EgfRoute, ResiduePrediction };

struct SelfTestOptions {
  bool quick = false;
  InjectedFault fault = InjectedFault::None;
};

struct SelfTestGroup {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample on failure
  double seconds = 0;
};

struct SelfTestReport {
  std::vector<SelfTestGroup> groups;

  bool all_passed() const;
};

/// Runs every invariant group; quick mode shrinks the ranges.
SelfTestReport run_selftest(const SelfTestOptions& options = {});

}  // namespace faulhaber
