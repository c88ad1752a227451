#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "app.hpp"

using permcluster::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, QTableLowOrders) {
  const auto r = call({"qtable", "--ensemble", "e2", "--imax", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r);
  EXPECT_EQ(doc["config"]["command"], "qtable");
  EXPECT_EQ(doc["config"]["imax"], 7);
  EXPECT_EQ(doc["Q"][0]["q"]["text"], "(1/2)/r");
  EXPECT_EQ(doc["Q"][5]["q"]["text"], "6/r^4 - 24/r^5 + (132/7)/r^6");
  EXPECT_EQ(doc["Q"][5]["q"]["terms"][2]["a"]["exact"], "132/7");
  EXPECT_EQ(doc["Q"][5]["q"]["terms"][2]["a"]["decimal"], "18.857143");
}

TEST(Cli, QTableEnsemblesAgree) {
  const auto a = parse(call({"qtable", "--ensemble", "e1", "--imax", "7"}));
  const auto b = parse(call({"qtable", "--ensemble", "e2", "--imax", "7"}));
  for (std::size_t j = 0; j < a["Q"].size(); ++j) EXPECT_EQ(a["Q"][j]["q"], b["Q"][j]["q"]);
}

TEST(Cli, QTableCsv) {
  const auto r = call({"qtable", "--imax", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# command=qtable\n"), std::string::npos);
  EXPECT_NE(r.out.find("table,i,k,a_k,decimal\nQ,2,1,1/2,0.5\nQ,3,2,2/3,0.66666667\n"), std::string::npos);
}

TEST(Cli, Verify) {
  EXPECT_EQ(call({"verify", "--conjecture", "2", "--imax", "7"}).code, 0);
  EXPECT_EQ(call({"verify", "--conjecture", "4", "--alpha", "1/2", "--imax", "8"}).code, 0);
  const auto e = call({"verify", "--conjecture", "1", "--ensemble", "e", "--imax", "3"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(parse(e)["report"]["summary"], "holds");
  EXPECT_EQ(call({"verify", "--conjecture", "3", "--imax", "3"}).code, 2);
}

TEST(Cli, GuardsAndUsageErrors) {
  EXPECT_EQ(call({"qtable", "--imax", "13"}).code, 2);
  EXPECT_EQ(call({"qtable", "--ensemble", "zz"}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"r2-extrapolate", "--r", "3"}).code, 2);
  EXPECT_EQ(call({"qtable", "--alpha", "3/2"}).code, 2);
  EXPECT_EQ(call({"oracle", "--n", "7"}).code, 2);
  EXPECT_EQ(call({"qtable", "--help"}).code, 0);
}

TEST(Cli, Oracle) {
  const auto r = call({"oracle", "--n", "3", "--r", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r);
  EXPECT_EQ(doc["e_perm"]["exact"], "2");
  EXPECT_EQ(doc["matrix_count"], "6");
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(call({"oracle", "--n", "5", "--r", "2"}).code, 0);
}

TEST(Cli, SampleCheck) {
  const auto r = call({"sample-check", "--ensemble", "e2", "--n", "4", "--r", "2", "--samples", "200000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(parse(r)["pass"].get<bool>());
}

TEST(Cli, OutputIndependentOfThreads) {
  for (std::vector<std::string> cmd : {std::vector<std::string>{"r2-extrapolate", "--imax", "6"},
                                       {"qtable", "--imax", "6", "--alpha", "7/10"},
                                       {"sample-check", "--n", "4", "--samples", "50000", "--seed", "3"},
                                       {"alpha-experiment", "--orders", "4,5"}}) {
    auto one = cmd, four = cmd;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = call(one), b = call(four);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(Cli, Extrapolations) {
  const auto r = call({"r2-extrapolate", "--imax", "4"});
  ASSERT_EQ(r.code, 0);
  const auto doc = parse(r);
  EXPECT_EQ(doc["config"]["n_grid"], nlohmann::json({50, 55, 60, 65, 70}));
  EXPECT_EQ(doc["rows"][0]["fit"]["limit"]["exact"], "1/4");
  const auto a = parse(call({"alpha-experiment", "--orders", "4"}));
  EXPECT_EQ(a["config"]["alpha"], "7/10");
  EXPECT_EQ(a["rows"][0]["reference"]["kind"], "finite");
  EXPECT_TRUE(a["rows"][0].contains("delta"));
}

TEST(Cli, Asymptotics) {
  const auto r = call({"asymptotics", "--s", "1", "--imax", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse(r);
  EXPECT_TRUE(doc["asymptotic"]["monotone"].get<bool>());
  EXPECT_TRUE(doc["sum_check"]["pass"].get<bool>());
}

TEST(Cli, R2ExtrapolationUpToFourteen) {
  const auto r = call({"r2-extrapolate", "--imax", "14"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : parse(r)["rows"]) {
    const double bound = row["i"].get<int>() <= 10 ? 1e-4 : 6e-3;
    EXPECT_LT(row["relative_error"].get<double>(), bound) << row["i"];
  }
}
