#include "faulhaber/cli.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "faulhaber/bench.hpp"
#include "faulhaber/bernoulli.hpp"
#include "faulhaber/integrality.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/primes.hpp"
#include "faulhaber/record.hpp"
#include "faulhaber/selftest.hpp"

namespace faulhaber::cli {

namespace {

using u64 = std::uint64_t;

struct Options {
  bool json = false;
  bool approx = false;
  bool verify = false;
  bool quick = false;
  std::string k, n;
  std::string route = "faulhaber";
  std::string kmax_pos, nmax_pos;
  std::optional<u64> kmax, nmax;
  long budget_ms = 5000;
  std::string fault = "none";
};

u64 parse_u64(const std::string& text, const char* what) {
  u64 value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw DomainError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return value;
}

std::string approx_text(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(17) << r.approx();
  return os.str();
}

std::string join(const std::vector<u64>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string witness_text(const Verdict& v) {
  if (v.integral) return "integral";
  if (std::holds_alternative<NEven>(v.witness)) return "not integral; witness n even";
  if (std::holds_alternative<NMod4IsTwo>(v.witness)) return "not integral; witness n = 2 (mod 4)";
  return "not integral; witness primes " + join(std::get<SharedPrimes>(v.witness).primes, ",");
}

void emit(std::ostream& out, const OutputRecord& record) { out << record.serialize() << '\n'; }

int cmd_bern(const Options& o, std::ostream& out, std::ostream& err) {
  const u64 k = parse_u64(o.k, "k");
  auto table = BernoulliCache::global().get(k);
  const Rational& value = table->at(k);
  if (o.verify) {
    auto egf = bernoulli_egf(k);
    for (u64 i = 0; i <= k; ++i) {
      if (egf[i] != (*table)[i]) {
        err << "route disagreement at B_" << i << ": recursion " << (*table)[i] << ", egf "
            << egf[i] << '\n';
        return kInconsistent;
      }
    }
  }
  if (o.json) {
    OutputRecord r{"bern", {{"k", o.k}}, Json::object(), {{"route", "recursion"}}};
    r.result["value"] = value.str();
    if (o.approx) r.result["approx"] = approx_text(value);
    if (o.verify) r.meta.emplace_back("verified", "egf");
    emit(out, r);
  } else {
    out << value.str();
    if (o.approx) out << " (~" << approx_text(value) << ")";
    out << '\n';
    if (o.verify) out << "verified: recursion = egf for B_0..B_" << k << '\n';
  }
  return kSuccess;
}

int cmd_denom(const Options& o, std::ostream& out) {
  const u64 k = parse_u64(o.k, "k");
  const auto primes = vsc_primes(k);
  const BigInt d = vsc_denominator(k);
  if (o.json) {
    OutputRecord r{"denom", {{"k", o.k}}, Json::object(), {}};
    r.result["value"] = to_string(d);
    Json ps = Json::array();
    for (auto p : primes) ps.push_back(std::to_string(p));
    r.result["primes"] = ps;
    emit(out, r);
  } else {
    out << to_string(d) << '\n';
  }
  return kSuccess;
}

// Evaluates S_k(n) by the requested route; "all" runs the three routes and
// reports exit 3 on disagreement.
int with_power_sum(const Options& o, std::ostream& err, const PowerSumQuery& q,
                   std::vector<std::string>& routes_used, BigInt& value) {
  if (o.route != "all") {
    const auto route = parse_power_sum_route(o.route);
    value = power_sum(q, route);
    routes_used.emplace_back(to_string(route));
    return kSuccess;
  }
  bool first = true;
  for (auto route : {PowerSumRoute::Brute, PowerSumRoute::Faulhaber, PowerSumRoute::Recursive}) {
    BigInt v = power_sum(q, route);
    routes_used.emplace_back(to_string(route));
    if (first) {
      value = v;
      first = false;
    } else if (v != value) {
      err << "route disagreement: " << to_string(route) << " gives " << to_string(v)
          << ", brute gives " << to_string(value) << '\n';
      return kInconsistent;
    }
  }
  return kSuccess;
}

std::string join_routes(const std::vector<std::string>& routes) {
  std::string out;
  for (std::size_t i = 0; i < routes.size(); ++i) out += (i ? "," : "") + routes[i];
  return out;
}

int cmd_sum_or_avg(const Options& o, bool average, std::ostream& out, std::ostream& err) {
  const PowerSumQuery q(parse_u64(o.k, "k"), parse_u64(o.n, "n"));
  std::vector<std::string> routes;
  BigInt s;
  if (int rc = with_power_sum(o, err, q, routes, s); rc != kSuccess) return rc;

  const Rational value = average ? Rational(s, from_u64(q.n())) : Rational(s);
  const char* name = average ? "avg" : "sum";
  if (o.json) {
    OutputRecord r{name, {{"k", o.k}, {"n", o.n}}, Json::object(), {{"route", join_routes(routes)}}};
    r.result["value"] = value.str();
    if (average) r.result["integral"] = value.is_integer();
    if (o.approx) r.result["approx"] = approx_text(value);
    if (routes.size() > 1) r.meta.emplace_back("agreement", "true");
    emit(out, r);
  } else {
    out << value.str();
    if (o.approx) out << " (~" << approx_text(value) << ")";
    out << '\n';
    if (routes.size() > 1) out << "routes agree: " << join_routes(routes) << '\n';
  }
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  const u64 k = parse_u64(o.k, "k");
  const BigInt n = parse_bigint(o.n);
  const Verdict v = decide(k, n);
  if (o.json) {
    OutputRecord r{"check", {{"k", o.k}, {"n", o.n}}, verdict_to_json(v), {{"rule", std::string(to_string(v.rule))}}};
    emit(out, r);
  } else {
    out << witness_text(v) << '\n';
  }
  return v.integral ? kSuccess : kNotIntegral;
}

int cmd_table(const Options& o, std::ostream& out) {
  u64 kmax = o.kmax.value_or(0);
  u64 nmax = o.nmax.value_or(0);
  if (!o.kmax_pos.empty()) kmax = parse_u64(o.kmax_pos, "kmax");
  if (!o.nmax_pos.empty()) nmax = parse_u64(o.nmax_pos, "nmax");
  if (kmax == 0) kmax = 8;
  if (nmax == 0) nmax = 12;
  const VerdictGrid g = grid(kmax, nmax);

  for (u64 k = 1; k <= kmax; ++k) {
    if (o.json) {
      OutputRecord r{"table", {{"k", std::to_string(k)}, {"nmax", std::to_string(nmax)}}, Json::object(), {}};
      if (k % 2 == 0) r.result["D_k"] = to_string(g.denominators[k - 1]);
      Json row = Json::array();
      for (u64 n = 1; n <= nmax; ++n) {
        Json cell = Json::object();
        cell["n"] = std::to_string(n);
        const Json verdict = verdict_to_json(g.at(k, n));
        for (const auto& [key, value] : verdict.items()) cell[key] = value;
        row.push_back(cell);
      }
      r.result["verdicts"] = row;
      emit(out, r);
      continue;
    }
    std::string label = "k=" + std::to_string(k) + ":";
    out << std::left << std::setw(7) << label;
    for (u64 n = 1; n <= nmax; ++n) out << (n > 1 ? " " : "") << (g.at(k, n).integral ? "✓" : "✗");
    if (k % 2 == 0) out << "   D_k=" << to_string(g.denominators[k - 1]);
    out << '\n';
  }
  return kSuccess;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  SelfTestOptions options;
  options.quick = o.quick;
  if (o.fault == "egf") {
    options.fault = InjectedFault::EgfRoute;
  } else if (o.fault == "residue") {
    options.fault = InjectedFault::ResiduePrediction;
  } else if (o.fault != "none") {
    throw DomainError("unknown fault '" + o.fault + "'");
  }
  const SelfTestReport report = run_selftest(options);

  std::vector<std::string> failed;
  for (const auto& g : report.groups) {
    if (!g.passed) failed.push_back(g.name);
    if (o.json) {
      OutputRecord r{"selftest", {{"group", g.name}}, Json::object(), {{"quick", o.quick ? "true" : "false"}}};
      r.result["passed"] = g.passed;
      if (!g.passed) r.result["detail"] = g.detail;
      emit(out, r);
    } else {
      out << (g.passed ? "PASS " : "FAIL ") << g.name;
      if (!g.passed) out << ": " << g.detail;
      out << '\n';
    }
  }
  if (failed.empty()) {
    if (!o.json) out << "all " << report.groups.size() << " invariant groups passed\n";
    return kSuccess;
  }
  if (!o.json) {
    out << failed.size() << " of " << report.groups.size() << " invariant groups failed:";
    for (const auto& f : failed) out << ' ' << f;
    out << '\n';
  }
  return kInconsistent;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.budget_ms < 1) throw DomainError("--budget-ms must be >= 1");
  BenchConfig config;
  config.budget = std::chrono::milliseconds(o.budget_ms);
  if (o.quick) config.cases = {{12, 100'000}, {1000, 1'000'000'000}};
  const BenchReport report = run_bench(config);

  for (const auto& c : report.cells) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << c.millis;
    const std::string verdict = !c.integral ? "-" : (*c.integral ? "integral" : "not-integral");
    if (o.json) {
      OutputRecord r{"bench",
                     {{"method", to_string(c.method)}, {"k", std::to_string(c.k)}, {"n", std::to_string(c.n)}},
                     Json::object(),
                     {{"budget_ms", std::to_string(o.budget_ms)}}};
      r.result["status"] = c.completed ? "ok" : "infeasible";
      r.result["millis"] = ms.str();
      r.result["verdict"] = verdict;
      emit(out, r);
    } else {
      out << std::left << std::setw(9) << to_string(c.method) << " k=" << std::setw(6) << c.k
          << " n=" << std::setw(11) << c.n << ' ';
      if (c.completed) {
        out << std::right << std::setw(12) << ms.str() << " ms  " << verdict << '\n';
      } else {
        out << std::right << std::setw(12) << ("> " + ms.str()) << " ms  infeasible (budget " << o.budget_ms
            << " ms)\n";
      }
    }
  }

  for (const auto& c : config.cases) {
    auto speedup = report.speedup(c.k, c.n);
    if (!speedup) continue;
    const BenchCell* smod = report.find(BenchMethod::SMod, c.k, c.n);
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << *speedup;
    if (o.json) {
      OutputRecord r{"bench-summary", {{"k", std::to_string(c.k)}, {"n", std::to_string(c.n)}}, Json::object(), {}};
      r.result["speedup"] = s.str();
      r.result["lower_bound"] = !smod->completed;
      emit(out, r);
    } else {
      out << "speedup decide vs s_mod at k=" << c.k << " n=" << c.n << ": "
          << (smod->completed ? "" : ">= ") << s.str() << "x\n";
    }
  }
  if (!report.consistent) {
    out << (o.json ? "" : "inconsistency: a summation disagreed with decide()\n");
    return kInconsistent;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bernoulli numbers, power sums, and integrality of their averages", "faulhaber"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "emit one JSON record per line");

  auto* bern = app.add_subcommand("bern", "print B_k");
  bern->add_option("k", o.k)->required();
  bern->add_flag("--verify", o.verify, "cross-check the recursion against the generating series");
  bern->add_flag("--approx", o.approx, "append a decimal approximation");

  auto* denom = app.add_subcommand("denom", "print D_k, the product of primes p with (p-1) | k");
  denom->add_option("k", o.k)->required();

  auto* sum = app.add_subcommand("sum", "print S_k(n)");
  auto* avg = app.add_subcommand("avg", "print S_k(n)/n");
  for (auto* sub : {sum, avg}) {
    sub->add_option("k", o.k)->required();
    sub->add_option("n", o.n)->required();
    sub->add_option("--route", o.route, "brute | faulhaber | recursive | all")
        ->check(CLI::IsMember({"brute", "faulhaber", "recursive", "all"}));
    sub->add_flag("--approx", o.approx, "append a decimal approximation");
  }

  auto* check = app.add_subcommand("check", "decide whether S_k(n)/n is an integer");
  check->add_option("k", o.k)->required();
  check->add_option("n", o.n)->required();

  auto* table = app.add_subcommand("table", "verdict grid for 1..kmax x 1..nmax");
  table->add_option("kmax_pos", o.kmax_pos, "kmax");
  table->add_option("nmax_pos", o.nmax_pos, "nmax");
  table->add_option("--kmax", o.kmax);
  table->add_option("--nmax", o.nmax);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_flag("--quick", o.quick, "reduced ranges");
  selftest->add_option("--inject-fault", o.fault, "none | egf | residue")->group("");

  auto* bench = app.add_subcommand("bench", "time decide() against summation");
  bench->add_option("--budget-ms", o.budget_ms, "per-cell time budget");
  bench->add_flag("--quick", o.quick, "only the headline cases");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("faulhaber");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (bern->parsed()) return cmd_bern(o, out, err);
    if (denom->parsed()) return cmd_denom(o, out);
    if (sum->parsed()) return cmd_sum_or_avg(o, false, out, err);
    if (avg->parsed()) return cmd_sum_or_avg(o, true, out, err);
    if (check->parsed()) return cmd_check(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnfactoredError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace faulhaber::cli
