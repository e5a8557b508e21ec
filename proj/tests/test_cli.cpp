#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using jackpieri::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeJackAtTwoIsSchur) {
  const auto r = invoke({"compute", "jack", "--r", "2", "--d", "2", "--partition", "2,0", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m[2,0] + 1*m[1,1]\n");
}

TEST(Cli, ComputeInterpFallingFactorial) {
  const auto r = invoke({"compute", "interp", "--r", "1", "--d", "2", "--partition", "2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "z1^2 - z1\n");
}

TEST(Cli, VerifyMysteriousSumRankOne) {
  const auto r = invoke({"verify", "mysterious-sum", "--r", "1", "--max-weight", "3", "--d", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS mysterious-sum"), std::string::npos);
}

TEST(Cli, SymbolicJack) {
  const auto r = invoke({"compute", "jack", "--r", "2", "--d", "symbolic", "--partition", "2,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m[2,0] + (2*d/(d+2))*m[1,1]\n");
}

TEST(Cli, PhiAndPsiText) {
  EXPECT_EQ(invoke({"compute", "phi", "--r", "2", "--d", "1", "--partition", "2,0"}).out, "3/8*m[2,0] + 1/4*m[1,1]\n");
  // r = 1: Psi_3 = z^3 / 3!.
  EXPECT_EQ(invoke({"compute", "psi", "--r", "1", "--d", "5", "--partition", "3"}).out, "1/6*m[3]\n");
}

TEST(Cli, LatexUsesBasisNotation) {
  EXPECT_EQ(invoke({"compute", "jack", "--r", "2", "--d", "2", "--partition", "2,0", "--format", "latex"}).out,
            "P_{(2,0)} = m_{(2,0)} + m_{(1,1)}\n");
  EXPECT_EQ(invoke({"compute", "interp", "--r", "1", "--d", "2", "--partition", "2", "--format", "latex"}).out,
            "P^{\\mathrm{ip}}_{(2)} = P_{(2)} - P_{(1)}\n");
}

TEST(Cli, KernelText) {
  const auto r = invoke({"compute", "kernel", "--r", "1", "--d", "1", "--max-weight", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(0): Psi(z) = 1; Phi(w) = 1\n(1): Psi(z) = z1; Phi(w) = w1\n(2): Psi(z) = 1/2*z1^2; Phi(w) = w1^2\n");
}

TEST(Cli, ComputeJson) {
  const auto r = invoke({"compute", "jack", "--r", "2", "--d", "1", "--partition", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["kind"], "jack");
  EXPECT_EQ(doc["partition"], nlohmann::json::array({2, 0}));
  EXPECT_EQ(doc["expansion"][1]["partition"], nlohmann::json::array({1, 1}));
  EXPECT_EQ(doc["expansion"][1]["coefficient"], "2/3");
  EXPECT_EQ(doc["polynomial"][0]["exponents"], nlohmann::json::array({2, 0}));
}

TEST(Cli, UsageErrors) {
  const auto unknown = invoke({"verify", "nope"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("kernel-intertwining"), std::string::npos);
  EXPECT_EQ(invoke({"compute", "jack", "--r", "1", "--d", "2", "--partition", "2,1"}).code, 2);
  EXPECT_EQ(invoke({"compute", "jack", "--r", "2", "--d", "2"}).code, 2);
  EXPECT_EQ(invoke({"compute", "jack", "--r", "2", "--partition", "1"}).code, 2);
  EXPECT_EQ(invoke({"compute", "jack", "--r", "2", "--d", "1/0", "--partition", "1"}).code, 2);
  EXPECT_EQ(invoke({"compute", "jack", "--r", "2", "--d", "1", "--partition", "1,2"}).code, 2);
  EXPECT_EQ(invoke({"compute", "hermite", "--d", "1"}).code, 2);
  EXPECT_EQ(invoke({"verify", "all", "--format", "yaml"}).code, 2);
  EXPECT_EQ(invoke({"verify", "all", "--d", "symbolic", "--d", "1"}).code, 2);
  EXPECT_EQ(invoke({"verify", "all", "--u", "maybe"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, DegenerateDFails) {
  // d = -2 makes the eigenvalues of (2,0) and (1,1) collide.
  const auto c = invoke({"compute", "jack", "--r", "2", "--d=-2", "--partition", "2,0"});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("EigenvalueCollision"), std::string::npos);
  const auto v = invoke({"verify", "d-eigen", "--r", "2", "--max-weight", "2", "--d=-2"});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("FAIL d-eigen"), std::string::npos);
  EXPECT_NE(v.out.find("first failure"), std::string::npos);
}

TEST(Cli, VerifyJsonSchemaAndDeterminism) {
  const std::vector<std::string> args{"verify", "all", "--r", "2", "--max-weight", "2", "--d", "1", "--d", "1/2",
                                      "--random-points", "2", "--seed", "11", "--format", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"tool_version", "config", "results", "coverage", "passed"}));
  EXPECT_EQ(doc["config"]["d"], nlohmann::json::array({"1", "1/2"}));
  EXPECT_EQ(doc["config"]["seed"], 11);
  ASSERT_EQ(doc["results"].size(), jackpieri::suite_catalog().size());
  for (const auto& r : doc["results"]) {
    EXPECT_EQ(r["failed"], 0);
    EXPECT_EQ(r["cases"], r["passed"]);
    EXPECT_FALSE(r.contains("first_failure"));
    EXPECT_EQ(r["millis"], 0);
  }
}

TEST(Cli, OutFileAndListSuites) {
  const std::string path = ::testing::TempDir() + "jackpieri_cli_out.txt";
  const auto r = invoke({"compute", "interp", "--r", "1", "--d", "2", "--partition", "3", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "z1^3 - 3*z1^2 + 2*z1");
  std::remove(path.c_str());

  const auto list = invoke({"list-suites"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("twisted-pieri: "), std::string::npos);
  const auto json = nlohmann::json::parse(invoke({"list-suites", "--format", "json"}).out);
  EXPECT_EQ(json.size(), jackpieri::suite_catalog().size());
}
