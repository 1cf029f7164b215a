#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "migrate/cli.hpp"

using namespace migrate;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome bench(std::vector<std::string> args) {
  args.insert(args.begin(), "migrate_bench");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("migrate_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string at(std::string const& name) const { return (dir / name).string(); }

  // gen -> run -> verify with the sidecar's epsilon.
  Outcome pipeline(std::vector<std::string> gen_args) {
    gen_args.insert(gen_args.begin(), "gen");
    gen_args.insert(gen_args.end(), {"--out", at("stream.jsonl")});
    auto g = bench(gen_args);
    if (g.code != 0) return g;
    auto expected = load_expected(at("expected.json"));
    auto r = bench({"run", "--stream", at("stream.jsonl"), "--epsilon", to_string(expected.run.epsilon), "--out",
                  at("report.json")});
    if (r.code != 0) return r;
    return bench({"verify", "--report", at("report.json"), "--expected", at("expected.json")});
  }

  fs::path dir;
};

}  // namespace

TEST_F(CliTest, GenWritesStreamAndSidecar) {
  auto r = bench({"gen", "--construction", "lax-static", "--epsilon", "1/5", "--out", at("s.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(at("s.jsonl")));
  auto e = load_expected(at("expected.json"));
  EXPECT_EQ(e.construction, "lax-static");
  EXPECT_EQ(*e.claims.expected_gamma, Rational(5, 2));
  auto stream = std::get<ChoosingStream>(load_stream(at("s.jsonl")));
  EXPECT_EQ(std::get<SubsetSumKind>(stream.problem).capacity, 4);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(bench({"gen", "--bogus"}).code, 2);
  EXPECT_EQ(bench({"gen", "--construction", "nonsense", "--out", at("x.jsonl")}).code, 2);
  auto bad_eps = bench({"gen", "--construction", "lax-static", "--epsilon", "3/10", "--out", at("x.jsonl")});
  EXPECT_EQ(bad_eps.code, 2);
  EXPECT_NE(bad_eps.err.find("EpsilonTooLarge"), std::string::npos);
  EXPECT_EQ(bench({"run", "--stream", at("missing.jsonl")}).code, 2);
  EXPECT_EQ(bench({"run", "--stream", at("x.jsonl"), "--epsilon", "1"}).code, 2);
}

TEST_F(CliTest, BuiltInConstructionsVerify) {
  std::vector<std::vector<std::string>> cases{
      {"--construction", "strict-static", "--T", "5"},
      {"--construction", "lax-static", "--epsilon", "1/5"},
      {"--construction", "strict-dynamic", "--epsilon", "1/10", "--N", "50"},
      {"--construction", "mis-bipartite", "--epsilon", "1/6", "--N", "20"},
      {"--construction", "mis-path", "--epsilon", "1/6", "--N", "1000"},
      {"--construction", "weight-migration", "--C", "20", "--variant", "static"},
      {"--construction", "alternating", "--N", "20"},
      {"--construction", "random-subsetsum", "--seed", "3"},
      {"--construction", "random-knapsack", "--seed", "3"},
      {"--construction", "random-mkp", "--seed", "3"},
      {"--construction", "random-grid", "--seed", "3"},
  };
  for (auto const& args : cases) {
    auto r = pipeline(args);
    EXPECT_EQ(r.code, 0) << args[1] << "\n" << r.out << r.err;
  }
}

TEST_F(CliTest, FrozenRunFailsVerification) {
  ASSERT_EQ(bench({"gen", "--construction", "strict-static", "--T", "5", "--out", at("s.jsonl")}).code, 0);
  auto e = load_expected(at("expected.json"));
  ASSERT_EQ(bench({"run", "--stream", at("s.jsonl"), "--algorithm", "frozen", "--epsilon", to_string(e.run.epsilon),
                 "--out", at("r.json")})
                .code,
            0);
  auto v = bench({"verify", "--report", at("r.json"), "--expected", at("expected.json")});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("ratio_bound"), std::string::npos);
}

TEST_F(CliTest, ReportExportsCsv) {
  ASSERT_EQ(bench({"gen", "--construction", "strict-static", "--T", "3", "--out", at("s.jsonl")}).code, 0);
  ASSERT_EQ(bench({"run", "--stream", at("s.jsonl"), "--out", at("r.json")}).code, 0);
  ASSERT_EQ(bench({"report", "--report", at("r.json"), "--csv", at("r.csv")}).code, 0);
  EXPECT_EQ(load_report(at("r.json")).rows.size(), 3U);
  EXPECT_GT(fs::file_size(at("r.csv")), 0U);
}

TEST_F(CliTest, ConfigRoundTripAndReuse) {
  RunConfig c;
  c.problem = KnapsackKind{30};
  c.algorithm = "combined";
  c.epsilon = Rational(1, 4);
  c.solver = "fptas";
  c.metric = Metric::Profit;
  c.seed = 9;
  c.limits = OracleLimits::parse("enum=12,dp=1000");
  c.stream = "s.jsonl";
  c.csv = "t.csv";
  save_config(at("c.json"), c);
  EXPECT_EQ(load_config(at("c.json")), c);

  ASSERT_EQ(bench({"gen", "--construction", "random-knapsack", "--seed", "1", "--out", at("s.jsonl")}).code, 0);
  ASSERT_EQ(bench({"run", "--stream", at("s.jsonl"), "--epsilon", "1/4", "--save-config", at("saved.json"), "--out",
                 at("a.json")})
                .code,
            0);
  ASSERT_EQ(bench({"run", "--config", at("saved.json"), "--out", at("b.json")}).code, 0);
  EXPECT_EQ(report_to_json(load_report(at("a.json"))), report_to_json(load_report(at("b.json"))));
}

TEST_F(CliTest, BinaryExitCodes) {
  char const* binary = std::getenv("MIGRATE_BENCH_PATH");
#ifdef MIGRATE_BENCH_PATH
  if (binary == nullptr) binary = MIGRATE_BENCH_PATH;
#endif
  if (binary == nullptr) GTEST_SKIP() << "MIGRATE_BENCH_PATH not set";
  auto status = [&](std::string const& args) {
    int raw = std::system((std::string("\"") + binary + "\" " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("--help"), 0);
  EXPECT_EQ(status("gen --no-such-flag"), 2);
  EXPECT_EQ(status("gen --construction lax-static --epsilon 1/5 --out " + at("s.jsonl")), 0);
}
