#include "faulhaber/cli.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/integrality.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/record.hpp"

using namespace faulhaber;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// Runs the installed binary through the shell.
Result run_binary(const std::string& args) {
  const std::string command = std::string(FAULHABER_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(CliBern, Examples) {
  EXPECT_EQ(run({"bern", "4"}).out, "-1/30\n");
  EXPECT_EQ(run({"bern", "3"}).out, "0\n");
  EXPECT_EQ(run({"bern", "6"}).out, "1/42\n");
}

TEST(CliBern, VerifyAndCap) {
  const auto ok = run({"bern", "30", "--verify"});
  EXPECT_EQ(ok.code, cli::kSuccess);
  EXPECT_EQ(first_line(ok.out), "8615841276005/14322");
  const auto over = run({"bern", "513"});
  EXPECT_EQ(over.code, cli::kUsageError);
  EXPECT_NE(over.err.find("cap"), std::string::npos);
}

TEST(CliDenom, Examples) {
  EXPECT_EQ(run({"denom", "12"}).out, "2730\n");
  EXPECT_EQ(run({"denom", "5"}).code, cli::kUsageError);
}

TEST(CliCheck, ExamplesAndExitCodes) {
  auto r = run({"check", "2", "6"});
  EXPECT_EQ(r.out, "not integral; witness primes 2,3\n");
  EXPECT_EQ(r.code, cli::kNotIntegral);

  r = run({"check", "3", "8"});
  EXPECT_EQ(r.out, "integral\n");
  EXPECT_EQ(r.code, cli::kSuccess);

  r = run({"check", "4", "49"});
  EXPECT_EQ(r.out, "integral\n");
  EXPECT_EQ(r.code, cli::kSuccess);

  EXPECT_EQ(run({"check", "1", "4"}).out, "not integral; witness n even\n");
  EXPECT_EQ(run({"check", "3", "6"}).out, "not integral; witness n = 2 (mod 4)\n");
}

TEST(CliCheck, MalformedInputIsUsageError) {
  EXPECT_EQ(run({"check", "x", "6"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "0", "6"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "2", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "-2", "6"}).code, cli::kUsageError);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
}

TEST(CliCheck, HugeN) {
  const std::string n = "1" + std::string(120, '0') + "1";
  EXPECT_EQ(run({"check", "1000", n}).code, decide(1000, parse_bigint(n)).integral ? 0 : 1);
}

TEST(CliSumAvg, Examples) {
  EXPECT_EQ(run({"sum", "2", "4"}).out, "30\n");
  EXPECT_EQ(run({"avg", "1", "3"}).out, "2\n");
  EXPECT_EQ(run({"avg", "3", "2"}).out, "9/2\n");
  EXPECT_EQ(run({"avg", "3", "2", "--approx"}).out, "9/2 (~4.5)\n");
}

TEST(CliSumAvg, EveryRouteAndAll) {
  for (const char* route : {"brute", "faulhaber", "recursive"}) {
    EXPECT_EQ(run({"sum", "7", "25", "--route", route}).out, to_string(s_brute({7, 25})) + "\n");
  }
  const auto all = run({"sum", "7", "25", "--route", "all"});
  EXPECT_EQ(all.code, cli::kSuccess);
  EXPECT_EQ(first_line(all.out), to_string(s_brute({7, 25})));
  EXPECT_NE(all.out.find("routes agree"), std::string::npos);
  EXPECT_EQ(run({"sum", "2", "4", "--route", "bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"sum", "0", "4"}).code, cli::kUsageError);
}

TEST(CliTable, Rows) {
  EXPECT_NE(run({"table", "1", "4"}).out.find("✓ ✗ ✓ ✗"), std::string::npos);
  const auto t3 = run({"table", "3", "4"}).out;
  EXPECT_NE(t3.find("k=3:   ✓ ✗ ✓ ✓"), std::string::npos);
  const auto t2 = run({"table", "--kmax", "2", "--nmax", "3"}).out;
  EXPECT_NE(t2.find("k=2:   ✓ ✗ ✗   D_k=6"), std::string::npos);
}

TEST(CliTable, JsonRowsCarryFullVerdicts) {
  const auto r = run({"table", "4", "6", "--json"});
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto rec = OutputRecord::parse(line);
    ++rows;
    EXPECT_EQ(rec.command, "table");
    EXPECT_EQ(rec.result["verdicts"].size(), 6U);
    if (rows == 4) {
      EXPECT_EQ(rec.result["D_k"], "30");
      EXPECT_EQ(rec.result["verdicts"][5]["witness"]["primes"], Json::array({"2", "3"}));
    }
  }
  EXPECT_EQ(rows, 4);
}

// Each command prints what the library returns for the same inputs.
TEST(CliAdapter, MatchesLibraryCalls) {
  for (std::uint64_t k = 0; k <= 40; ++k) {
    EXPECT_EQ(run({"bern", std::to_string(k)}).out, BernoulliCache::global().get(k)->at(k).str() + "\n");
  }
  for (std::uint64_t k = 1; k <= 9; ++k) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const auto ks = std::to_string(k), ns = std::to_string(n);
      EXPECT_EQ(run({"sum", ks, ns}).out, to_string(s_faulhaber({k, n})) + "\n");
      EXPECT_EQ(run({"avg", ks, ns}).out, mu({k, n}).value.str() + "\n");
      const auto c = run({"check", ks, ns, "--json"});
      const auto rec = OutputRecord::parse(first_line(c.out));
      EXPECT_EQ(rec.result, verdict_to_json(decide(k, from_u64(n))));
      EXPECT_EQ(c.code, decide(k, from_u64(n)).integral ? 0 : 1);
    }
  }
}

TEST(CliJson, RecordsRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"bern", "10", "--json", "--approx"},
                                                                {"denom", "60", "--json"},
                                                                {"sum", "3", "10", "--json", "--route", "all"},
                                                                {"avg", "4", "7", "--json"},
                                                                {"check", "6", "35", "--json"}}) {
    const auto r = run(args);
    const auto line = first_line(r.out);
    const auto rec = OutputRecord::parse(line);
    EXPECT_EQ(rec.serialize(), line);
    EXPECT_EQ(rec.command, args[0]);
  }
  const auto avg = OutputRecord::parse(first_line(run({"avg", "3", "2", "--json"}).out));
  EXPECT_EQ(avg.result["value"], "9/2");
  EXPECT_EQ(avg.result["integral"], false);
}

TEST(CliSelftest, QuickPassesAndFaultIsNamed) {
  const auto ok = run({"selftest", "--quick"});
  EXPECT_EQ(ok.code, cli::kSuccess);
  EXPECT_NE(ok.out.find("all 22 invariant groups passed"), std::string::npos);

  const auto bad = run({"selftest", "--quick", "--inject-fault", "egf"});
  EXPECT_NE(bad.code, cli::kSuccess);
  EXPECT_NE(bad.out.find("failed: bernoulli.route-equivalence"), std::string::npos);
}

TEST(CliBench, QuickReportShowsGap) {
  const auto r = run({"bench", "--quick", "--budget-ms", "300", "--json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  bool saw_infeasible = false, saw_summary = false;
  while (std::getline(lines, line)) {
    const auto rec = OutputRecord::parse(line);
    if (rec.command == "bench" && rec.result["status"] == "infeasible") saw_infeasible = true;
    if (rec.command == "bench-summary") saw_summary = true;
  }
  EXPECT_TRUE(saw_infeasible);
  EXPECT_TRUE(saw_summary);
}

TEST(CliBinary, ExitCodeContract) {
  EXPECT_EQ(run_binary("bern 4").out, "-1/30\n");
  EXPECT_EQ(run_binary("check 2 6").code, 1);
  EXPECT_EQ(run_binary("check 3 8").code, 0);
  EXPECT_EQ(run_binary("check two 8").code, 2);
  EXPECT_EQ(run_binary("bern 100000").code, 2);
  EXPECT_EQ(run_binary("selftest --quick --inject-fault egf").code, 3);
  EXPECT_EQ(run_binary("sum 2 4 --json").out,
            R"({"command":"sum","inputs":{"k":"2","n":"4"},"result":{"value":"30"},"meta":{"route":"faulhaber"}})"
            "\n");
}
