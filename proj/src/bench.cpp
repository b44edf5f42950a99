#include "faulhaber/bench.hpp"

#include "faulhaber/integrality.hpp"
#include "faulhaber/kernels.hpp"

namespace faulhaber {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::vector<BenchCase> BenchConfig::default_cases() {
  return {{2, 1'000}, {12, 100'000}, {20, 1'000'000}, {1000, 1'000'000'000}};
}

std::string to_string(BenchMethod method) {
  switch (method) {
    case BenchMethod::Decide: return "decide";
    case BenchMethod::SMod: return "s_mod";
    case BenchMethod::Brute: return "s_brute";
  }
  return "unknown";
}

const BenchCell* BenchReport::find(BenchMethod method, std::uint64_t k, std::uint64_t n) const {
  for (const auto& c : cells) {
    if (c.method == method && c.k == k && c.n == n) return &c;
  }
  return nullptr;
}

std::optional<double> BenchReport::speedup(std::uint64_t k, std::uint64_t n) const {
  const BenchCell* fast = find(BenchMethod::Decide, k, n);
  const BenchCell* slow = find(BenchMethod::SMod, k, n);
  if (fast == nullptr || slow == nullptr) return std::nullopt;
  const double denom = fast->millis > 0 ? fast->millis : 1e-6;
  return slow->millis / denom;
}

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  report.budget = config.budget;

  for (const auto& c : config.cases) {
    // Cold cache: the decide timing includes the sieve to k + 1.
    DenominatorCache cache;
    const BigInt n = from_u64(c.n);
    auto start = Clock::now();
    const Verdict verdict = decide(c.k, n, cache);
    BenchCell decided{BenchMethod::Decide, c.k, c.n, true, millis_since(start), verdict.integral};
    report.cells.push_back(decided);

    start = Clock::now();
    auto residue = kernels::omp::power_sum_mod_u64(c.k, c.n, c.n,
                                                   kernels::Deadline::after(config.budget));
    BenchCell smod{BenchMethod::SMod, c.k, c.n, residue.has_value(), millis_since(start), {}};
    if (residue) smod.integral = *residue == 0;
    report.cells.push_back(smod);

    start = Clock::now();
    auto exact = kernels::omp::power_sum(c.k, c.n, kernels::Deadline::after(config.budget));
    BenchCell brute{BenchMethod::Brute, c.k, c.n, exact.has_value(), millis_since(start), {}};
    if (exact) brute.integral = mpz_divisible_p(exact->get_mpz_t(), n.get_mpz_t()) != 0;
    report.cells.push_back(brute);

    for (const auto& cell : {smod, brute}) {
      if (cell.integral && *cell.integral != verdict.integral) report.consistent = false;
    }
  }
  return report;
}

}  // namespace faulhaber
