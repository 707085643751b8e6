#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "griffiths/riemann.hpp"

using namespace griffiths::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "griffiths");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool check_passes(const json& doc, const std::string& name) {
  for (const auto& c : doc["checks"])
    if (c["name"] == name) return c["pass"].get<bool>();
  ADD_FAILURE() << "missing check " << name;
  return false;
}

}  // namespace

TEST(Cli, ParseConfig) {
  const char* argv[] = {"griffiths", "structure", "--n", "3", "--s", "1/2", "--provider", "random:seed=4", "--seed", "9"};
  VerifyConfig c = parse_config(10, argv);
  EXPECT_EQ(c.command, "structure");
  EXPECT_EQ(*c.n, 3);
  EXPECT_EQ(c.s, "1/2");
  EXPECT_EQ(*c.provider, "random:seed=4");
  EXPECT_EQ(*c.seed, 9u);
  const char* bad[] = {"griffiths", "structure", "--n", "three"};
  EXPECT_THROW(parse_config(4, bad), ConfigError);
}

TEST(Cli, SeedPrecedence) {
  VerifyConfig c;
  ::unsetenv("GRIFFITHS_SEED");
  EXPECT_EQ(effective_seed(c), default_seed);
  ::setenv("GRIFFITHS_SEED", "77", 1);
  EXPECT_EQ(effective_seed(c), 77u);
  c.seed = 5;
  EXPECT_EQ(effective_seed(c), 5u);
  ::unsetenv("GRIFFITHS_SEED");
}

TEST(Cli, StructureOnSpaceForm) {
  Outcome o = invoke({"structure", "--n", "3", "--s", "1", "--provider", "csc:k=1"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = o.doc();
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["command"], "structure");
  EXPECT_TRUE(doc["all_pass"].get<bool>());
  EXPECT_GT(doc["checks"].size(), 20u);
  for (const auto& c : doc["checks"]) {
    EXPECT_TRUE(c.contains("name") && c.contains("pass") && c.contains("residual"));
    EXPECT_EQ(c["residual"], "0");
  }
}

TEST(Cli, EinsteinProductOfSpheres) {
  Outcome o = invoke({"einstein", "--provider", "product-spheres:1,1,2,2", "--u", "0.5,0.5,0.5,0.5"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = o.doc();
  EXPECT_TRUE(doc["einstein"].get<bool>());
  EXPECT_FALSE(doc["csc"].get<bool>());
  EXPECT_EQ(doc["einstein_residual"], "0");

  Outcome u = invoke({"einstein", "--provider", "product-spheres:1,1/4,2,2"});
  ASSERT_EQ(u.code, 0) << u.err;
  EXPECT_FALSE(u.doc()["einstein"].get<bool>());
  EXPECT_EQ(u.doc()["einstein_residual"], "3/8");
}

TEST(Cli, SymmetryDeterminantString) {
  Outcome o = invoke({"symmetry", "--n", "2", "--k", "1", "--s", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = o.doc();
  EXPECT_EQ(doc["det"], "−c(c²+4ε)");
  EXPECT_EQ(doc["det_expanded"], "-c^3 - 4*c");
  ASSERT_EQ(doc["solutions"].size(), 1u);
  EXPECT_EQ(doc["solutions"][0]["c"], "0");

  json hyp = invoke({"symmetry", "--n", "3", "--k", "-1"}).doc();
  EXPECT_EQ(hyp["solutions"].size(), 4u);
}

TEST(Cli, CscCommand) {
  Outcome o = invoke({"csc", "--n", "4", "--k", "-2", "--s", "0.5"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.doc()["s"], "1/2");
}

TEST(Cli, Hypersurface) {
  Outcome o = invoke({"hypersurface", "--eigenvalues", "1,2,3", "--k", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = o.doc();
  EXPECT_EQ(doc["sigma"], json::array({"1", "6", "11", "6"}));
  EXPECT_EQ(doc["residuals"]["volume"], "6");
  EXPECT_EQ(doc["residuals"]["mean"], "19");
  EXPECT_EQ(doc["residuals"]["scal"], "48");
  EXPECT_EQ(doc["gauss_scal"], "28");
  EXPECT_TRUE(check_passes(doc, "el_form_scal"));

  Outcome m = invoke({"hypersurface", "--A", "[[1, 0.5], [\"1/2\", 2]]", "--r-nu", "3"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.doc()["residuals"]["mean"], "1/2");
  EXPECT_FALSE(m.doc()["residuals"].contains("scal"));
}

TEST(Cli, AsymmetricShapeOperatorFails) {
  Outcome o = invoke({"hypersurface", "--A", "[[1, 2], [0, 1]]"});
  EXPECT_EQ(o.code, 1);
  json doc = o.doc();
  EXPECT_FALSE(doc["all_pass"].get<bool>());
  EXPECT_FALSE(check_passes(doc, "shape_operator_symmetric"));
  EXPECT_FALSE(check_passes(doc, "legendre_dtheta"));
}

TEST(Cli, BrokenTensorFromJsonFails) {
  auto path = std::filesystem::temp_directory_path() / "griffiths_cli_broken.json";
  std::ofstream(path) << R"({"n": 3, "components": [[0,1,2,3,1,1]]})";
  Outcome o = invoke({"structure", "--provider", "json:" + path.string()});
  EXPECT_EQ(o.code, 1);
  EXPECT_FALSE(check_passes(o.doc(), "riemann_symmetries"));
  std::filesystem::remove(path);
}

TEST(Cli, JsonProviderRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "griffiths_cli_random.json";
  std::ofstream(path) << griffiths::riemann_to_json(griffiths::random_riemann(3, 3));
  Outcome o = invoke({"structure", "--provider", "json:" + path.string(), "--s", "2"});
  EXPECT_EQ(o.code, 0) << o.err;
  std::filesystem::remove(path);
}

TEST(Cli, ChartProvider) {
  Outcome o = invoke({"einstein", "--provider", "chart:sphere-stereographic:x=0.1,0.2,-0.3", "--n", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = o.doc();
  EXPECT_TRUE(doc["csc"].get<bool>());
  EXPECT_TRUE(check_passes(doc, "richardson"));
}

TEST(Cli, GwistorReport) {
  Outcome o = invoke({"gwistor", "--samples", "300", "--ascent", "80"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = o.doc();
  EXPECT_TRUE(doc["coclosure"]["phi"].get<bool>());
  EXPECT_NEAR(doc["comass"]["lower_bound"].get<double>(), 1.0, 0.05);
  EXPECT_TRUE(check_passes(doc, "special_lagrangian"));
  EXPECT_TRUE(check_passes(doc, "phi_on_vertical_plane"));
}

TEST(Cli, ReportsAreByteStable) {
  std::vector<std::string> args{"gwistor", "--provider", "random:seed=12", "--samples", "50", "--seed", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  std::vector<std::string> structure{"structure", "--provider", "random"};
  ::setenv("GRIFFITHS_SEED", "101", 1);
  std::string first = invoke(structure).out;
  EXPECT_EQ(first, invoke(structure).out);
  ::unsetenv("GRIFFITHS_SEED");
}

TEST(Cli, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "griffiths_cli_report.json";
  Outcome o = invoke({"csc", "--n", "2", "--output", path.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  json doc = json::parse(in);
  EXPECT_EQ(doc["command"], "csc");
  std::filesystem::remove(path);
}

TEST(Cli, ConfigErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"structure", "--provider", "nope"},
           {"structure", "--s", "-1"},
           {"structure", "--s", "abc"},
           {"csc", "--n", "0"},
           {"einstein", "--provider", "product-spheres:1,1,2"},
           {"einstein", "--provider", "product-spheres:1,1,2,2", "--n", "4"},
           {"gwistor", "--provider", "csc:k=1", "--n", "2"},
           {"hypersurface"},
           {"hypersurface", "--A", "[[1,2]]"},
           {"hypersurface", "--eigenvalues", "1,2", "--k", "1", "--scalM", "2"},
           {"structure", "--provider", "json:/nonexistent/file.json"},
           {"structure", "--u", "0,0,0,0"},
           {"structure", "--samples", "0"}}) {
    Outcome o = invoke(args);
    EXPECT_EQ(o.code, 2) << (args.empty() ? "<none>" : args[0]) << " " << o.out;
    EXPECT_FALSE(o.err.empty());
  }
}

TEST(Cli, HelpExitsZero) {
  Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("structure"), std::string::npos);
}
