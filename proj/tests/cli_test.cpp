#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "evokit_cli.hpp"

using namespace evokit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "evokit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("evokit_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string build(const std::string& name, const std::string& family, const std::string& params,
                    const std::string& field) const {
    auto r = run_cli({"build", family, "--params", params, "--field", field, "--out", path(name)});
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildWritesAlgebra) {
  auto r = run_cli({"build", "eub", "--params", R"({"n":2,"gram":[1,2]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["field"], "Q");
  EXPECT_EQ(j["matrix"][1][3], "2");
  auto params = write("bnk.json", R"({"n":1,"k":4})");
  auto f3 = run_cli({"build", "bnk", "--params", params, "--field", "F3"});
  ASSERT_EQ(f3.code, 0) << f3.err;
  EXPECT_EQ(json::parse(f3.out)["field"], "F3");
}

TEST_F(CliTest, AnalyzeEub) {
  auto file = build("eub.json", "eub", R"({"n":2,"gram":[1,2]})", "Q");
  auto r = run_cli({"analyze", file});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["type"], json({2, 2}));
  EXPECT_EQ(j["nilpotent"], true);
  EXPECT_EQ(j["power_dims"], json({4, 1, 0}));
  EXPECT_EQ(j["triangular_witness"], json({1, 2, 3, 4}));
}

TEST_F(CliTest, AnalyzeIdempotentIsNegative) {
  auto file = write("idem.json", R"({"field":"Q","dim":1,"kind":"evolution","matrix":[["1"]]})");
  auto r = run_cli({"analyze", file});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["type"], "NotNilpotent");
}

TEST_F(CliTest, MalformedInputIsUsageError) {
  auto file = write("bad.json", "{\"field\": ");
  auto r = run_cli({"analyze", file});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run_cli({"analyze", path("missing.json")}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"build", "eub", "--params", R"({"n":2,"gram":[0,2]})"}).code, 2);
  EXPECT_EQ(run_cli({"build", "nope", "--params", "{}"}).code, 2);
}

TEST_F(CliTest, FieldMismatch) {
  auto file = build("bnk.json", "bnk", R"({"n":1,"k":4})", "F3");
  auto r = run_cli({"analyze", file, "--field", "F5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("FieldMismatch"), std::string::npos);
  EXPECT_EQ(run_cli({"analyze", file, "--field", "F3"}).code, 0);
}

TEST_F(CliTest, GraphDotIsStable) {
  auto file = build("elr.json", "elr", R"({"l":2,"n":2,"r":2,"gram":[1,1],"u_coords":[1,1]})", "Q");
  auto a = run_cli({"graph", file});
  auto b = run_cli({"graph", file, "--dot", path("g.dot")});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  std::ifstream in(path("g.dot"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(a.out, ss.str());
  EXPECT_NE(a.out.find("  e2 -> e4;\n"), std::string::npos);
  EXPECT_EQ(a.out, run_cli({"graph", file}).out);
}

TEST_F(CliTest, Fingerprint) {
  auto file = build("eub.json", "eub", R"({"n":2,"gram":[1,2]})", "F5");
  auto r = run_cli({"fingerprint", file});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["type"], json({2, 2}));
  EXPECT_EQ(j["square_of_square_dim"], 0);
}

TEST_F(CliTest, IsoFoundAndNotFound) {
  auto a = write("a.json", R"({"field":"F3","dim":2,"kind":"evolution","matrix":[[0,1],[0,0]]})");
  auto b = write("b.json", R"({"field":"F3","dim":2,"kind":"evolution","matrix":[[0,2],[0,0]]})");
  auto z = write("z.json", R"({"field":"F3","dim":2,"kind":"evolution","matrix":[[0,0],[0,0]]})");
  auto r = run_cli({"iso", "--src", a, "--dst", b, "--count-all"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "ISOMORPHIC");
  EXPECT_EQ(j["witness_count"], j["witnesses"].size());
  EXPECT_EQ(j["visited"], j["candidates"]);
  auto none = run_cli({"iso", "--src", a, "--dst", z});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(json::parse(none.out)["verdict"], "NOT_FOUND");
  EXPECT_EQ(run_cli({"iso", "--src", a, "--dst", b, "--full", "--budget", "10"}).code, 2);
}

TEST_F(CliTest, IsoOverRationalsRejected) {
  auto file = build("q.json", "bnk", R"({"n":1,"k":2})", "Q");
  auto r = run_cli({"iso", "--src", file, "--dst", file});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("InfiniteFieldUnsupported"), std::string::npos);
}

TEST_F(CliTest, NonisoFamily) {
  auto bnk = build("bnk.json", "bnk", R"({"n":1,"k":4})", "F3");
  auto r = run_cli({"noniso-family", "--src", bnk, "--family", "type_ones", "--params-grid", R"({"n":1,"k":4})"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NONE_ISOMORPHIC");
  EXPECT_EQ(j["members"].size(), 54u);

  auto elr = build("elr.json", "elr", R"({"l":1,"n":1,"r":1,"gram":[1],"u_coords":[1]})", "F3");
  auto s = run_cli({"noniso-family", "--src", elr, "--family", "elr", "--params-grid", R"({"l":1,"n":1,"r":1})"});
  EXPECT_EQ(s.code, 1);
  EXPECT_EQ(json::parse(s.out)["verdict"], "SOME_ISOMORPHIC");
}

TEST_F(CliTest, RoundTripMatchesInMemory) {
  const PrimeField f(3);
  auto file = build("elr.json", "elr", R"({"l":1,"n":2,"r":2,"gram":[1,2],"u_coords":[1,0]})", "F3");
  auto r = run_cli({"analyze", file});
  ASSERT_EQ(r.code, 0);
  auto expected = cli::detail::analyze_json(
      Algebra(build_elr(f, ElrParams<PrimeField>{1, 2, 2, {f.one(), f.from_int(2)}, {f.one(), f.zero()}})));
  EXPECT_EQ(json::parse(r.out), expected);
}

TEST_F(CliTest, VerifySmallBudgetSkips) {
  auto r = run_cli({"verify-paper", "--budget", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[SKIPPED] 5."), std::string::npos);
  EXPECT_EQ(r.out.find("[PASS] 5."), std::string::npos);
  EXPECT_NE(r.out.find("[PASS] 1."), std::string::npos);
}

TEST(Checks, BrokenBuilderFailsTypeGrid) {
  auto broken = [](const PrimeField& f, const TypeOnesParams<PrimeField>& p) {
    auto a = build_type_ones(f, p);
    if (a.dim() > 2) a(a.dim() - 2, a.dim() - 1) = f.zero();
    return a;
  };
  EXPECT_EQ(check_type_ones_grid({}, broken).verdict, Verdict::Fail);
  EXPECT_EQ(check_type_ones_grid({}).verdict, Verdict::Pass);
}
