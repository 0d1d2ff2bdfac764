#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace podbond {
namespace {

using cli::run;

std::string data(const std::string& name) { return std::string(PODBOND_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  Json json;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  Json j;
  if (!out.str().empty() && out.str().front() == '{') j = Json::parse(out.str());
  return {code, j, err.str()};
}

TEST(Cli, ClassifyInversion) {
  const Result r = call({"classify", "--point", data("inversion_point.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.json["schema"], kSchema);
  EXPECT_EQ(r.json["command"], "classify");
  EXPECT_EQ(r.json["backend"], "exact");
  EXPECT_EQ(r.json["class"], to_string(BoundaryClass::Inversion));
  EXPECT_NEAR(r.json["parameter"].get<double>(), 2.0, 1e-12);
  EXPECT_TRUE(r.json.contains("certificate"));
  EXPECT_TRUE(r.json.contains("planar_map"));
}

TEST(Cli, ClassifyVertex) {
  const Result r = call({"classify", "--point", data("vertex.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.json["class"], to_string(BoundaryClass::Vertex));
  EXPECT_EQ(r.json["note"], "never a bond");
  EXPECT_FALSE(r.json.contains("certificate"));
}

TEST(Cli, ClassifyFloatAndInteriorPoints) {
  const auto f = fixtures::write_json("float_point.json", [] {
    Json j = to_json(to_approx(act(random_rational_isometry(5), similarity_normal_form<GaussianRational>(Rational(3)),
                                   Side::right)));
    j["backend"] = "float";
    return j;
  }());
  const Result r = call({"classify", "--point", f.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.json["backend"], "float");
  EXPECT_EQ(r.json["class"], to_string(BoundaryClass::Similarity));
  EXPECT_NEAR(r.json["parameter"].get<double>(), 3.0, 1e-9);

  const auto interior = fixtures::write_json("interior.json", to_json(embed(random_rational_isometry(6))));
  EXPECT_EQ(call({"classify", "--point", interior.string()}).code, cli::kVerificationFailed);
  const auto off = fixtures::write_json("off_x.json", Json{{"h", 0}, {"M", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
                                                           {"x", {0, 0, 0}}, {"y", {0, 0, 0}}, {"r", 1}});
  EXPECT_EQ(call({"classify", "--point", off.string()}).code, cli::kVerificationFailed);
}

TEST(Cli, MalformedInvocations) {
  EXPECT_EQ(call({}).code, cli::kMalformed);
  EXPECT_EQ(call({"frobnicate"}).code, cli::kMalformed);
  EXPECT_EQ(call({"classify"}).code, cli::kMalformed);
  EXPECT_EQ(call({"classify", "--point", data("missing.json")}).code, cli::kMalformed);
  EXPECT_EQ(call({"analyze", "--pod", data("butterfly_pod.json"), "--level", "3"}).code, cli::kMalformed);
  EXPECT_EQ(call({"make-bond", "--type", "bogus"}).code, cli::kMalformed);
  EXPECT_EQ(call({"make-bond", "--type", "collinearity", "--line", "1,2:3"}).code, cli::kMalformed);
  const auto bad = fixtures::temp_path("bad.json");
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(call({"classify", "--point", bad.string()}).code, cli::kMalformed);
}

TEST(Cli, HelpExitsCleanly) {
  std::ostringstream out, err;
  EXPECT_EQ(run({"--help"}, out, err), cli::kOk);
  EXPECT_NE(out.str().find("verify-motion"), std::string::npos);
}

TEST(Cli, VerifyMotionOnButterflyFixture) {
  const auto fx = fixtures::butterfly_fixture();
  const auto pod = fixtures::write_json("bf_pod.json", to_json(fx.pod));
  const auto motion = fixtures::write_json("bf_motion.json", to_json(fx.motion));
  const auto plot = fixtures::temp_path("bf_plot.csv");
  const Result r = call({"verify-motion", "--pod", pod.string(), "--motion", motion.string(), "--plot", plot.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.json["samples"], 12);
  EXPECT_EQ(r.json["evaluated"], 12);
  EXPECT_EQ(r.json["exact_zero"], true);
  EXPECT_EQ(r.json["max_residual"].get<double>(), 0.0);
  EXPECT_EQ(r.json["passed"], true);

  std::ifstream in(plot);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,leg1,leg2,leg3,leg4,leg5,leg6");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 12);
}

TEST(Cli, VerifyMotionFailsOnWrongPod) {
  fixtures::Rng rng(100);
  const auto pod = fixtures::write_json("generic_pod.json", to_json(fixtures::generic_pod(rng)));
  const Result r = call({"verify-motion", "--pod", pod.string(), "--motion", data("z_rotation.json")});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  EXPECT_EQ(r.json["passed"], false);
  EXPECT_EQ(call({"verify-motion", "--pod", pod.string(), "--motion", data("z_rotation.json"), "--samples", "0"}).code,
            cli::kMalformed);
}

TEST(Cli, LimitBonds) {
  const Result r = call({"limit-bonds", "--motion", data("z_rotation.json"), "--pod", data("butterfly_pod.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  ASSERT_EQ(r.json["bonds"].size(), 2u);
  for (const auto& b : r.json["bonds"]) {
    EXPECT_EQ(b["bond"]["class"], to_string(BoundaryClass::Butterfly));
    EXPECT_FALSE(b["exact_t"].is_null());
    EXPECT_EQ(b["order"], 0);
    EXPECT_TRUE(b.contains("member"));
  }
}

TEST(Cli, MakeBond) {
  const Result b = call({"make-bond", "--type", "butterfly", "--platform-line", "0,0,0:0,0,1", "--base-line",
                         "1,0,0:0,3/5,4/5"});
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  EXPECT_EQ(b.json["class"], to_string(BoundaryClass::Butterfly));
  EXPECT_EQ(b.json["type"], "butterfly");

  const Result c = call({"make-bond", "--type", "collinearity", "--line", "1,2,3:0,1,1", "--side", "right"});
  ASSERT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_EQ(c.json["class"], to_string(BoundaryClass::CollinearityRight));

  const Result m = call({"make-bond", "--type", "mobius", "--L", "0,0,-1", "--R", "0,0,-1", "--kind", "similarity",
                         "--parameter", "3", "--tau1", "0.5,1,2"});
  ASSERT_EQ(m.code, cli::kOk) << m.err;
  EXPECT_EQ(m.json["class"], to_string(BoundaryClass::Similarity));
  EXPECT_TRUE(m.json.contains("planar_map"));

  EXPECT_EQ(call({"make-bond", "--type", "mobius", "--L", "0,0,0", "--R", "0,0,1"}).code, cli::kMalformed);
}

TEST(Cli, ProjectCheck) {
  const auto pod = fixtures::write_json("sim_pod.json", to_json(fixtures::similarity_pod(Rational(2))));
  const Result yes = call({"project-check", "--pod", pod.string(), "--L", "0,0,-1", "--R", "0,0,-1"});
  ASSERT_EQ(yes.code, cli::kOk) << yes.err;
  EXPECT_EQ(yes.json["equivalent"], true);
  EXPECT_LE(yes.json["residual"].get<double>(), 1e-9);
  const Result no = call({"project-check", "--pod", pod.string(), "--L", "1,0,0", "--R", "0,1,0"});
  ASSERT_EQ(no.code, cli::kOk);
  EXPECT_EQ(no.json["equivalent"], false);
  EXPECT_TRUE(no.json["fit"].is_null());
}

TEST(Cli, AnalyzeIsDeterministic) {
  const std::vector<std::string> args{"analyze", "--pod", data("butterfly_pod.json"), "--level", "2", "--starts", "8",
                                      "--seed", "4"};
  std::ostringstream a, b, err;
  ASSERT_EQ(run(args, a, err), cli::kOk) << err.str();
  ASSERT_EQ(run(args, b, err), cli::kOk);
  EXPECT_EQ(a.str(), b.str());
  const Json j = Json::parse(a.str());
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["level"], 2);
  EXPECT_EQ(j["conditions"]["ii"]["flag"], true);
}

}  // namespace
}  // namespace podbond
