#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "oasbench/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "oasbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = oasbench::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oasbench_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, RunWritesEventsAndSummary) {
  const Result r = invoke({"run", "--algo", "oas-stagnation", "--n", "64", "--n", "128", "--reps", "4", "--seed",
                           "3", "--targets", "60,64", "--workers", "2", "--out", path("e.csv")});
  ASSERT_EQ(r.code, oasbench::cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("oas-stagnation"), std::string::npos);

  std::ifstream events(path("e.csv"));
  const auto rows = oasbench::read_trace_csv(events);
  EXPECT_FALSE(rows.empty());

  std::ifstream summary(path("e.csv.summary.csv"));
  std::string header;
  std::getline(summary, header);
  EXPECT_EQ(header, oasbench::kSummaryCsvHeader);
  int lines = 0;
  for (std::string line; std::getline(summary, line);) ++lines;
  EXPECT_EQ(lines, 6);  // 2 sizes x (optimum + 2 targets)
}

TEST_F(CliTest, RunIsReproducible) {
  const std::vector<std::string> base{"run", "--algo", "hh", "--n", "100", "--reps", "3", "--seed", "9"};
  auto a = base;
  a.insert(a.end(), {"--out", path("a.csv"), "--workers", "1"});
  auto b = base;
  b.insert(b.end(), {"--out", path("b.csv"), "--workers", "3"});
  ASSERT_EQ(invoke(a).code, 0);
  ASSERT_EQ(invoke(b).code, 0);
  std::ifstream fa(path("a.csv"));
  std::ifstream fb(path("b.csv"));
  std::stringstream sa;
  std::stringstream sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(CliTest, InvalidConfigurationsExitOne) {
  EXPECT_EQ(invoke({"run", "--algo", "ollga", "--n", "16", "--lambda2", "17", "--reps", "1", "--seed", "1", "--out",
                    path("x.csv")})
                .code,
            oasbench::cli::kExitInvalidConfig);
  EXPECT_EQ(invoke({"run", "--algo", "opo-ea", "--n", "4", "--reps", "1", "--seed", "1", "--out", path("x.csv")})
                .code,
            oasbench::cli::kExitInvalidConfig);
  EXPECT_EQ(invoke({"run", "--algo", "sa", "--n", "16", "--reps", "1", "--seed", "1", "--out", path("x.csv")}).code,
            oasbench::cli::kExitInvalidConfig);
  EXPECT_EQ(invoke({"run", "--algo", "opo-ea", "--n", "16", "--reps", "1", "--seed", "1", "--targets", "5,x",
                    "--out", path("x.csv")})
                .code,
            oasbench::cli::kExitInvalidConfig);
  EXPECT_EQ(invoke({}).code, oasbench::cli::kExitInvalidConfig);
  EXPECT_EQ(invoke({"bounds", "--n", "4"}).code, oasbench::cli::kExitInvalidConfig);
  EXPECT_EQ(invoke({"sweep", "--config", path("missing.json")}).code, oasbench::cli::kExitInvalidConfig);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, oasbench::cli::kExitOk); }

TEST_F(CliTest, SweepFromConfig) {
  {
    std::ofstream cfg(path("s.json"));
    cfg << R"({"master_seed": 2, "reps": 2, "out": ")" << path("s.csv") << R"(",
              "experiments": [{"algo": "opo-ea", "n": 32}, {"algo": "ollga", "n": [32, 64], "lambda2": 3}]})";
  }
  const Result r = invoke({"sweep", "--config", path("s.json"), "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("s.csv")));
  EXPECT_TRUE(fs::exists(path("s.csv.summary.csv")));
}

TEST_F(CliTest, BoundsPrintsDefaults) {
  const Result r = invoke({"bounds", "--n", "1024"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("default lambda2 = 7"), std::string::npos);
  EXPECT_NE(r.out.find("default k = 98"), std::string::npos);
  EXPECT_NE(r.out.find("default switch distance = 554"), std::string::npos);
  const Result f = invoke({"bounds", "--n", "1024", "--d", "64", "--lambda", "8"});
  EXPECT_NE(f.out.find("1044.33703"), std::string::npos) << f.out;
}

TEST_F(CliTest, ValidateSmallGridPasses) {
  const Result r = invoke({"validate", "--grid-max-n", "5", "--trials", "20000"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}
