#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "affcl/cli.hpp"
#include "test_support.hpp"

namespace affcl {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string &name) {
  return std::string(AFFCL_FIXTURE_DIR) + "/" + name;
}

std::filesystem::path temp_file(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("affcl_cli_test_" + name);
}

TEST(Cli, CoaffineHyperbola) {
  const auto r = run({"coaffine", fixture("hyp33.json"), "--divisor", "1,2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("coaffine: true, strongly coaffine: false, affine trivial: false"),
            std::string::npos)
      << r.out;
}

TEST(Cli, AffineClassGroupOfSquareCone) {
  const auto r = run({"acl", fixture("quadric_square_cone.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("ACl = Z"), std::string::npos) << r.out;
}

TEST(Cli, DeterminantalCatalog) {
  const auto r = run({"catalog", "detring", "--m", "2", "--n", "2", "--k", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("dim 3, height 1, Cl = ACl = Z"), std::string::npos) << r.out;
  EXPECT_EQ(run({"catalog", "detring", "--m", "2", "--n", "2", "--k", "3"}).status, 1);
}

TEST(Cli, ClassGroupVerboseListsFacets) {
  const auto r = run({"cl", fixture("a1_cone.json"), "--verbose"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Z/2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F2"), std::string::npos) << r.out;
}

TEST(Cli, Simplicial) {
  EXPECT_EQ(run({"simplicial", fixture("first_quadrant.json")}).status, 0);
  EXPECT_EQ(run({"simplicial", fixture("quadric_square_cone.json")}).status, 0);
}

TEST(Cli, OracleAgreement) {
  const auto r = run({"oracle", fixture("quadric_square_cone.json"), "--bound", "6",
                      "--divisor", "1,0,0,0"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("agreement: true"), std::string::npos) << r.out;
  const auto h = run({"oracle", fixture("hyp2.json"), "--bound", "6"});
  EXPECT_EQ(h.status, 0) << h.out;
}

TEST(Cli, EmitFixture) {
  const auto path = temp_file("fixture.json");
  std::filesystem::remove(path);
  const auto r = run({"oracle", fixture("a1_cone.json"), "--bound", "4", "--emit-fixture",
                      path.string()});
  ASSERT_EQ(r.status, 0);
  std::ifstream f(path);
  ASSERT_TRUE(f);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_TRUE(j.at("agreement").get<bool>());
  EXPECT_TRUE(j.contains("input_hash"));
  std::filesystem::remove(path);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "cl", fixture("quadric_square_cone.json")},
      {"--json", "acl", fixture("hyp33.json")},
      {"--json", "coaffine", fixture("hyp33.json"), "--divisor", "2,3"},
      {"--json", "coaffine", fixture("quadric_square_cone.json"), "--divisor", "1,0,0,0"},
      {"--json", "simplicial", fixture("a1_cone.json")},
      {"catalog", "detring", "--m", "3", "--n", "3", "--k", "2", "--json"},
      {"--json", "oracle", fixture("first_quadrant.json"), "--bound", "3"}};
  for (const auto &cmd : commands) {
    const auto r = run(cmd);
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    // determinism
    EXPECT_EQ(run(cmd).out, r.out);
  }
}

TEST(Cli, MalformedFileExitsOne) {
  const auto path = temp_file("bad.json");
  {
    std::ofstream f(path);
    f << "{\n  \"schema\": 1,\n  \"kind\": \"monoid\",\n  \"lattice_rank\": 2,\n  \"generators\": [[1, 0],\n";
  }
  const auto r = run({"cl", path.string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  {
    std::ofstream f(path);
    f << R"({"schema": 1, "kind": "monoid", "lattice_rank": 2, "generators": [[1, "x"]]})";
  }
  const auto r2 = run({"cl", path.string()});
  EXPECT_EQ(r2.status, 1);
  EXPECT_NE(r2.err.find("generators"), std::string::npos) << r2.err;
  {
    std::ofstream f(path);
    f << R"({"schema": 1, "kind": "monoid", "lattice_rank": 2, "generators": [[1, 0], [-1, 0]]})";
  }
  EXPECT_EQ(run({"cl", path.string()}).status, 1);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"cl", "/nonexistent/ring.json"}).status, 1);
}

TEST(Cli, DivisorLengthMismatchExitsOne) {
  const auto r = run({"coaffine", fixture("hyp33.json"), "--divisor", "1,2,3"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(run({"coaffine", fixture("a1_cone.json"), "--divisor", "1,x"}).status, 1);
}

TEST(Cli, NegativeDivisor) {
  const auto r = run({"coaffine", fixture("hyp33.json"), "--divisor=-1,0"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("coaffine: false"), std::string::npos) << r.out;
}

TEST(Cli, NonLocalHyperbola) {
  const auto r = run({"acl", fixture("hyp235_nonlocal.json")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(run({"coaffine", fixture("hyp235_nonlocal.json"), "--divisor", "1,1,1"}).status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 1);
  EXPECT_EQ(run({"frobnicate"}).status, 1);
}

} // namespace
} // namespace affcl
