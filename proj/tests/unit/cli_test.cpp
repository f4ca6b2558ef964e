#include "qpart/qpart.h"

#include <gtest/gtest.h>

#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#ifndef QPART_CLI_PATH
#error "QPART_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QPART_CLI_PATH + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json parse(const Result& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST(Cli, CountExample) {
  Result r = run("count --coeffs 2,3,5 --target 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"count\":\"4\"}\n");
  EXPECT_EQ(run("count --coeffs 2,3,5 --target 10 --method brute").out, r.out);
  EXPECT_EQ(run("count --coeffs 2,3,5 --target 10 --method via-sum").out, r.out);
  EXPECT_EQ(run("--format text count --coeffs 2,3,5 --target 10").out, "4\n");
}

TEST(Cli, FracsumExample) {
  Result r = run("fracsum --r 0,4,0,1,5 --method fast");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"sum\":\"10\"}\n");
  EXPECT_EQ(run("fracsum --r 0,4,0,1,5 --method brute").out, r.out);
  EXPECT_EQ(run("fracsum --r 0,4,0,1,5 --method lemma").out, r.out);
}

TEST(Cli, NegativeListValues) {
  Result fast = run("fracsum --r=-30,400,-7,13,97 --method fast");
  Result brute = run("fracsum --r=-30,400,-7,13,97 --method brute");
  ASSERT_EQ(fast.code, 0);
  EXPECT_EQ(fast.out, brute.out);
}

TEST(Cli, DivisionExample) {
  Result r = run("qpoly-div --f \"n^2\" --g \"2*n+1\"");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["quotient"]["period"], 2);
  EXPECT_EQ(j["quotient"]["components"].dump(), R"([["-1","1"],["0","1"]])");
  EXPECT_EQ(j["remainder"]["components"].dump(), R"([["1","3"],["1","1"]])");
}

TEST(Cli, OutputRoundTripsThroughSchema) {
  Result r = run("qpoly-gcd --f \"n^3,3*n+1\" --bezout");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  std::vector<std::string> docs{j["gcd"].dump()};
  for (const auto& u : j["coefficients"]) docs.push_back(u.dump());
  for (const auto& doc : docs) {
    qpart_qpoly* q = nullptr;
    ASSERT_EQ(qpart_qpoly_parse(doc.c_str(), &q), QPART_OK) << doc;
    char* back = nullptr;
    ASSERT_EQ(qpart_qpoly_to_json(q, &back), QPART_OK);
    EXPECT_EQ(std::string(back), doc);
    qpart_string_free(back);
    qpart_qpoly_free(q);
  }
  Result gcd = run("qpoly-gcd --f n --f \"n+2\"");
  Result eval = run("qpoly-eval --f '" + parse(gcd)["gcd"].dump() + "' --n 10,11");
  EXPECT_EQ(eval.out, "{\"values\":[\"2\",\"1\"]}\n");
}

TEST(Cli, BezoutAndInverse) {
  Result b = run("qpoly-gcd --f \"n,n+1\" --bezout");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(parse(b)["coefficients"].size(), 2u);
  Result inv = run("qpoly-inv --a n --b \"n+1\"");
  ASSERT_EQ(inv.code, 0);
  EXPECT_EQ(parse(inv)["inverse"]["components"].dump(), R"([["0","1"]])");
}

TEST(Cli, SymbolicCommands) {
  Result c = run("count-symbolic --coeffs \"n,n+1\" --target \"n*(n+1)\"");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(parse(c)["count"]["components"].dump(), R"([["2"]])");
  Result s = run("fracsum --symbolic --r \"0,n-1,0,1,n\"");
  ASSERT_EQ(s.code, 0);
  // n(n-1)/2 needs one integer polynomial per parity class.
  EXPECT_EQ(parse(s)["sum"]["period"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("count --coeffs 2,x --target 3").code, 2);
  EXPECT_EQ(run("count --target 3").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("qpoly-eval --f \"n^\" --n 1").code, 2);
  EXPECT_EQ(run("--format yaml count --coeffs 2,3 --target 3").code, 2);
  EXPECT_EQ(run("qpoly-inv --a \"2*n\" --b \"4*n+2\"").code, 3);
  EXPECT_EQ(run("fracsum --r 0,4,0,1,0").code, 3);
  EXPECT_EQ(run("qpoly-gcd --f 0").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, PeriodCapFromEnvironment) {
  EXPECT_EQ(run("qpoly-gcd --f \"n^2+1,n+3\"").code, 0);
  EXPECT_EQ(run("qpoly-gcd --f \"n^2+1,n+3\"", "QPART_PERIOD_CAP=5").code, 3);
  EXPECT_EQ(run("qpoly-gcd --f n", "QPART_PERIOD_CAP=abc").code, 2);
}

TEST(Cli, BenchSeparatesTimings) {
  const std::string timings = ::testing::TempDir() + "qpart_bench_timings.json";
  Result r = run("bench --kind fracsum --methods fast,brute --sizes 1e3,1e6,1e9,1e12 --reps 1 "
              "--brute-cutoff 1e6 --timings " + timings);
  ASSERT_EQ(r.code, 0);
  auto rows = parse(r)["rows"];
  ASSERT_EQ(rows.size(), 8u);
  int fast = 0;
  for (const auto& row : rows) {
    if (row["method"] == "fast") {
      ++fast;
      EXPECT_EQ(row["status"], "ok");
      // 2*log2(r5) + 2 for r5 = 10^k
      const std::string size = row["size"];
      const double bound = 2 * 3.3219280948873623 * static_cast<double>(size.size() - 1) + 2;
      EXPECT_LE(std::stod(row["steps"].get<std::string>()), bound);
    } else if (row["size"] == "1000000000" || row["size"] == "1000000000000") {
      EXPECT_EQ(row["status"], "skipped");
    }
    EXPECT_FALSE(row.contains("median_seconds"));
  }
  EXPECT_EQ(fast, 4);
  std::ifstream f(timings);
  auto t = nlohmann::ordered_json::parse(f);
  EXPECT_EQ(t["timings"].size(), 6u);
}

TEST(Cli, BenchCount3AgreesWithBruteForce) {
  Result r = run("bench --kind count3 --methods fast,brute --sizes 1e6 --reps 1");
  ASSERT_EQ(r.code, 0);
  auto rows = parse(r)["rows"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["value"], rows[1]["value"]);
}

TEST(Cli, BenchEmptyMethodList) {
  Result r = run("bench --methods \"\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["rows"].size(), 0u);
}
