#include "quotmotive/cli/app.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using quotmotive::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QUOTMOTIVE_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, ClassGolden) {
  const auto r = call({"class", "--n", "2", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "S2 + S1^2*L + S2*L^2\n");
}

TEST(Cli, PoincareGolden) {
  EXPECT_EQ(call({"poincare", "--n", "0", "--r", "3", "--g", "5"}).out, "1\n");
  EXPECT_EQ(call({"poincare", "--n", "2", "--r", "2", "--g", "0"}).out, "1 + 2*t^2 + 4*t^4 + 2*t^6 + t^8\n");
}

TEST(Cli, VerifyProductTable) {
  const auto r = call({"verify-product", "--r", "2", "--g", "1", "--order", "4"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n\tstatus\tpoincare");
  for (int n = 0; n <= 4; ++n) {
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_EQ(line.rfind(std::to_string(n) + "\tOK\t", 0), 0U) << line;
  }
  EXPECT_FALSE(std::getline(lines, line));
}

TEST(Cli, JsonRecords) {
  const json c = json::parse(call({"class", "--n", "1", "--r", "3", "--json"}).out);
  EXPECT_EQ(c["op"], "class");
  EXPECT_EQ(c["params"], (json{{"n", 1}, {"r", 3}}));
  EXPECT_EQ(c["class"], "S1 + S1*L + S1*L^2");

  const json p = json::parse(call({"poincare", "--n", "1", "--r", "2", "--g", "1", "--json"}).out);
  EXPECT_EQ(p["coefficients"], json::array({1, 2, 2, 2, 1}));

  const json b = json::parse(call({"betti", "--n", "2", "--r", "2", "--g", "0", "--json"}).out);
  EXPECT_EQ(b["betti"], json::array({1, 0, 2, 0, 4, 0, 2, 0, 1}));

  const json e = json::parse(call({"euler", "--n", "1", "--r", "2", "--g", "0", "--json"}).out);
  EXPECT_EQ(e["euler_characteristic"], 4);
}

TEST(Cli, BettiAndEulerTables) {
  EXPECT_EQ(call({"betti", "--n", "1", "--r", "1", "--g", "1"}).out, "k\tb_k\n0\t1\n1\t2\n2\t1\n");
  EXPECT_EQ(call({"euler", "--n", "3", "--r", "2", "--g", "1"}).out, "0\n");
}

TEST(Cli, CountPoints) {
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "2", "--q", "2", "--g", "0"}).out, "9\n");
  EXPECT_EQ(call({"count-points", "--n", "2", "--r", "2", "--q", "2", "--g", "0"}).out, "53\n");
  // Genus one over F_5 with trace 2: #C(F_5) = 4.
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "1", "--q", "5", "--curve", data("genus_one_q5.json")}).out,
            "4\n");
  // Numerator derived from the equation: N_1 = 7.
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "1", "--q", "3", "--curve", data("elliptic_f3.json")}).out,
            "7\n");
}

TEST(Cli, PunctualWithSpecialization) {
  EXPECT_EQ(call({"punctual", "--n", "2", "--r", "2", "--q", "2"}).out, "1 + L + L^2\nL=2\t7\n");
}

TEST(Cli, VerifyStratification) {
  const auto r = call({"verify-stratification", "--n", "3", "--r", "3", "--points", "2", "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(j["difference"], "0");
  EXPECT_EQ(j["params"]["points"], 2);
  EXPECT_EQ(call({"verify-stratification", "--n", "1", "--r", "1"}).out, "OK\tS1\n");
}

TEST(Cli, OracleKinds) {
  auto count = [](const std::vector<std::string>& args) { return json::parse(call(args).out)["count"]; };
  EXPECT_EQ(count({"oracle", "--kind", "punctual", "--q", "2", "--r", "2", "--n", "2", "--method", "both"}), 7);
  EXPECT_EQ(count({"oracle", "--kind", "affine", "--q", "2", "--r", "2", "--n", "1"}), 6);
  EXPECT_EQ(count({"oracle", "--kind", "affine-framed", "--q", "2", "--r", "2", "--n", "1"}), 6);
  EXPECT_EQ(count({"oracle", "--kind", "p1", "--q", "2", "--r", "2", "--n", "2"}), 53);
  EXPECT_EQ(count({"oracle", "--kind", "curve-points", "--q", "3", "--order", "3", "--curve", data("elliptic_f3.json")}),
            json::array({7, 7, 28}));
  EXPECT_EQ(count({"oracle", "--kind", "sym-divisors", "--q", "3", "--n", "4", "--curve", data("elliptic_f3.json")}),
            280);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"class", "--n", "1"}).code, 2);
  EXPECT_EQ(call({"class", "--n", "1", "--r", "0"}).code, 2);
  EXPECT_EQ(call({"class", "--n", "-1", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "2", "--q", "6", "--g", "0"}).code, 2);
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "2", "--q", "2", "--g", "1"}).code, 2);
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "2", "--q", "3", "--curve", data("genus_two_bare.json")}).code, 2);
  EXPECT_EQ(call({"count-points", "--n", "1", "--r", "2", "--q", "3", "--curve", data("missing.json")}).code, 2);
  EXPECT_EQ(call({"oracle", "--kind", "punctual", "--q", "2", "--r", "2", "--n", "2", "--method", "fast"}).code, 2);
  EXPECT_EQ(call({"oracle", "--kind", "bogus", "--q", "2", "--r", "2", "--n", "2"}).code, 2);
  const auto missing = call({"poincare", "--n", "1", "--r", "1"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("--g"), std::string::npos);
}

TEST(Cli, BudgetErrorsExitTwo) {
  const auto r = call({"oracle", "--kind", "affine", "--q", "3", "--r", "3", "--n", "3", "--budget", "100"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(call({"oracle", "--kind", "punctual", "--q", "3", "--r", "3", "--n", "3", "--method", "walk"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify-stratification"), std::string::npos);
}

TEST(Cli, EmptyGridIsAVacuousPass) {
  const auto r = call({"suite", "--grid", data("empty_grid.json"), "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_TRUE(j["cells"].empty());
}

TEST(Cli, SuiteReportsOracleAndFormula) {
  const auto r = call({"suite", "--grid", data("small_grid.json"), "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["cells"].size(), 3U);
  EXPECT_EQ(j["cells"][0]["check"], "rank_one");
  EXPECT_EQ(j["cells"][1]["check"], "stratification");
  const json& punctual = j["cells"][2];
  EXPECT_EQ(punctual["check"], "punctual");
  EXPECT_EQ(punctual["detail"]["oracle"], 7);
  EXPECT_EQ(punctual["detail"]["formula"], 7);
}

TEST(Cli, VerificationFailureExitsOne) {
  const auto r = call({"suite", "--grid", data("wrong_numerator_grid.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("FAIL\tcurve_zeta", 0), 0U) << r.out;
  EXPECT_NE(r.out.find("summary\t0/1 passed"), std::string::npos);
}

TEST(Cli, SuiteIsDeterministicAcrossThreadCounts) {
  const auto one = call({"suite", "--grid", data("small_grid.json"), "--json", "--threads", "1"});
  const auto many = call({"suite", "--grid", data("small_grid.json"), "--json", "--threads", "4"});
  EXPECT_EQ(one.out, many.out);
}
