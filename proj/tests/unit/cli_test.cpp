#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "circlemap/field_io.hpp"
#include "circlemap/problem.hpp"
#include "cli.hpp"

namespace circlemap {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("circlemap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static nlohmann::json load(const std::string& file) {
    std::ifstream in(file);
    return nlohmann::json::parse(in);
  }
  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, SolveA1FromRandomStart) {
  const int code = run({"solve", "--problem", "a1", "--p", "2", "--nodes", "201", "--init",
                        "random", "--seed", "1", "--out", path("r.json"), "--field-out",
                        path("f.csv")});
  ASSERT_EQ(code, 0) << err_.str();
  const auto r = load(path("r.json"));
  EXPECT_TRUE(r["converged"].get<bool>());
  EXPECT_NEAR(r["final_energy"].get<double>(), 2.4674011, 2.4674011e-3);
  EXPECT_EQ(r["field_path"], path("f.csv"));
  EXPECT_EQ(read_field_csv(fs::path(path("f.csv"))).size(), 201u);
}

TEST_F(Cli, SolvedFieldIsAcceptedByVerify) {
  ASSERT_EQ(run({"solve", "--problem", "a2", "--p", "3", "--nodes", "15", "--seed", "4", "--out",
                 path("r.json"), "--field-out", path("f.csv")}),
            0);
  EXPECT_EQ(run({"verify", "--problem", "a2", "--p", "3", "--nodes", "15", "--field-in",
                 path("f.csv"), "--out", path("v.json")}),
            0)
      << err_.str();
  EXPECT_TRUE(err_.str().empty());
  EXPECT_TRUE(load(path("v.json"))["verify"]["all_pass"].get<bool>());
}

TEST_F(Cli, VerifyConstantSquare) {
  write_field_csv(fs::path(path("constant.csv")), make_constant_2d(Grid(2, 41)));
  EXPECT_EQ(run({"verify", "--problem", "a2", "--p", "2", "--nodes", "41", "--field-in",
                 path("constant.csv"), "--out", path("v.json")}),
            0);
  EXPECT_EQ(load(path("v.json"))["verify"]["el_residual"].get<double>(), 0.0);
}

TEST_F(Cli, ExponentBelowTwoIsAConfigError) {
  EXPECT_EQ(run({"solve", "--p", "1.5"}), 1);
  EXPECT_NE(err_.str().find("p must be ≥ 2"), std::string::npos) << err_.str();
}

TEST_F(Cli, NonConvergenceExitsTwo) {
  EXPECT_EQ(run({"solve", "--nodes", "101", "--max-iters", "1", "--seed", "3"}), 2);
  EXPECT_FALSE(nlohmann::json::parse(out_.str())["converged"].get<bool>());
}

TEST_F(Cli, InadmissibleFieldFailsVerification) {
  write_field_csv(fs::path(path("bad.csv")), make_constant_2d(Grid(2, 5)));
  std::ofstream(path("one.csv")) << "x,u1,u2\n0,0,1\n0.5,0,1\n1,0,1\n";
  EXPECT_EQ(run({"verify", "--problem", "a1", "--nodes", "3", "--field-in", path("one.csv")}), 3);
  EXPECT_FALSE(nlohmann::json::parse(out_.str())["verify"]["admissible"].get<bool>());
}

TEST_F(Cli, ConfigAndInputErrorsExitOne) {
  EXPECT_EQ(run({"solve", "--bogus"}), 1);
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"solve", "--problem", "a3"}), 1);
  EXPECT_EQ(run({"solve", "--nodes", "2"}), 1);
  EXPECT_EQ(run({"solve", "--init", "sideways"}), 1);
  EXPECT_EQ(run({"solve", "--problem", "a2", "--init", "geodesic"}), 1);
  EXPECT_EQ(run({"verify", "--field-in", path("missing.csv")}), 1);
  std::ofstream(path("bad_header.csv")) << "x,v1,v2\n0,0,1\n0.5,0,1\n1,0,1\n";
  EXPECT_EQ(run({"verify", "--nodes", "3", "--field-in", path("bad_header.csv")}), 1);
  std::ofstream(path("short.csv")) << "x,u1,u2\n0,0,1\n1,1,0\n";
  EXPECT_EQ(run({"verify", "--nodes", "3", "--field-in", path("short.csv")}), 1);
  EXPECT_EQ(run({"verify", "--nodes", "5", "--field-in", path("bad_header.csv")}), 1);
  EXPECT_EQ(run({"oracle", "--problem", "a2"}), 1);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(Cli, FileInitMustMatchTheGrid) {
  write_field_csv(fs::path(path("g.csv")), make_geodesic_1d(Grid(1, 51)));
  EXPECT_EQ(run({"solve", "--nodes", "51", "--init", "file:" + path("g.csv")}), 0) << err_.str();
  EXPECT_EQ(run({"solve", "--nodes", "52", "--init", "file:" + path("g.csv")}), 1);
}

TEST_F(Cli, OracleWritesLiftedEnergy) {
  ASSERT_EQ(run({"oracle", "--p", "4", "--nodes", "201", "--out", path("o.json"), "--field-out",
                 path("o.csv")}),
            0);
  EXPECT_NEAR(load(path("o.json"))["lifted_energy"].get<double>(), 6.0880682, 1e-7);
  EXPECT_TRUE(fs::exists(path("o.csv")));
}

TEST_F(Cli, IdenticalRunsGiveIdenticalReports) {
  auto strip = [](std::string s) {
    const auto at = s.find("\"wall_time_ms\"");
    const auto end = s.find('\n', at);
    return s.erase(at, end - at);
  };
  for (int k : {0, 1}) {
    ASSERT_EQ(run({"solve", "--problem", "a2", "--p", "3", "--nodes", "21", "--seed", "9",
                   "--out", path("r" + std::to_string(k) + ".json")}),
              0);
  }
  EXPECT_EQ(strip(slurp(path("r0.json"))), strip(slurp(path("r1.json"))));
}

TEST_F(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("solve"), std::string::npos);
}

}  // namespace
}  // namespace circlemap
