#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "strongcp/cli.hpp"
#include "strongcp/families.hpp"
#include "strongcp/generators.hpp"
#include "strongcp/io.hpp"
#include "strongcp/polytope.hpp"
#include "strongcp/svg.hpp"

namespace strongcp {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("strongcp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  int run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  Json report() const { return Json::parse(out_); }

  fs::path dir_;
  std::string out_, err_;
};

TEST_F(CliTest, ComputeSinglePoint) {
  const auto pts = write("one.txt", "2 1\n0 0\n");
  ASSERT_EQ(run({"compute", pts, "--family", "axis-box"}), cli::kOk) << err_;
  const auto r = report();
  EXPECT_EQ(r["schema_version"], "1");
  EXPECT_EQ(r["mode"], "compute");
  EXPECT_EQ(r["point"]["index"], 0);
  EXPECT_EQ(r["point"]["coords"], (Json{"0", "0"}));
  EXPECT_TRUE(r["verdict"]["ok"].get<bool>());
}

TEST_F(CliTest, ComputeFourCollinearCustomFamily) {
  const auto pts = write("pts.txt", "2 4\n0 0\n1 0\n2 0\n3 0\n");
  const auto normals = write("n.txt", "2 2\n1 0\n-1 0\n");
  for (const char* mode : {"", "--exact"}) {
    std::vector<std::string> args{"compute", pts, "--family", "custom:" + normals};
    if (*mode) args.push_back(mode);
    ASSERT_EQ(run(args), cli::kOk) << err_;
    const auto r = report();
    EXPECT_EQ(r["point"]["coords"], (Json{"1", "0"}));
    EXPECT_EQ(r["certificate"]["halfspaces"][0]["offset"].get<double>(), 2.0);
    EXPECT_EQ(r["certificate"]["halfspaces"][1]["offset"].get<double>(), -1.0);
    EXPECT_EQ(r["certificate"]["region_members"], (Json{1, 2}));
  }
}

TEST_F(CliTest, ComputeTightnessInstance) {
  const auto pts = write("t.txt", io::format_points(tightness_instance(axis_box_family(2), 8).points));
  ASSERT_EQ(run({"compute", pts}), cli::kOk);
  EXPECT_TRUE(report()["verdict"]["ok"].get<bool>());
}

TEST_F(CliTest, VerifyExamples) {
  std::string text = "2 8\n";
  for (int i = 0; i < 8; ++i) text += std::to_string(i) + " 0\n";
  const auto pts = write("line.txt", text);
  EXPECT_EQ(run({"verify", pts, "--family", "axis-box", "--candidate", "7,0"}), cli::kNegativeVerdict);
  auto r = report();
  EXPECT_FALSE(r["verdict"]["ok"].get<bool>());
  EXPECT_EQ(r["verdict"]["witness_orientation"]["direction"], (Json{1.0, 0.0}));
  EXPECT_EQ(r["verdict"]["witness_count"], 7);

  EXPECT_EQ(run({"verify", pts, "--candidate", "3,0", "--exact"}), cli::kOk);
  EXPECT_EQ(run({"verify", pts, "--candidate", "3.5,0"}), cli::kOk);
  EXPECT_EQ(report()["candidate"]["coords"], (Json{"3.5", "0"}));
  // Every point lies strictly below y = 100.
  EXPECT_EQ(run({"verify", pts, "--candidate", "3.5,100"}), cli::kNegativeVerdict);
  EXPECT_EQ(run({"verify", pts, "--candidate", "1,2,3"}), cli::kDimensionError);
}

TEST_F(CliTest, ComputeVerifyRoundTripOnGenerators) {
  std::vector<std::pair<std::string, std::string>> cases;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance(seed, 5 + seed * 7, 2, 4);
    cases.emplace_back(io::format_points(inst.points), "axis-box");
  }
  cases.emplace_back(io::format_points(convex_position_instance(9)), "skyline");
  cases.emplace_back(io::format_points(tightness_instance(downward_triangle_family(), 12).points),
                     "downward-triangle");
  for (auto kind : {DegenerateKind::AllCoincident, DegenerateKind::AllCollinear,
                    DegenerateKind::WithDuplicates}) {
    cases.emplace_back(io::format_points(degenerate_instance(kind).points), "orthant");
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto pts = write("case" + std::to_string(i) + ".txt", cases[i].first);
    ASSERT_EQ(run({"compute", pts, "--family", cases[i].second}), cli::kOk) << err_;
    const auto coords = report()["point"]["coords"];
    std::string candidate;
    for (const auto& c : coords) candidate += (candidate.empty() ? "" : ",") + c.get<std::string>();
    EXPECT_EQ(run({"verify", pts, "--family", cases[i].second, "--candidate", candidate}), cli::kOk)
        << "case " << i;
  }
}

TEST_F(CliTest, ReportsAreDeterministicApartFromTiming) {
  const auto pts = write("r.txt", io::format_points(random_instance(3, 40, 3, 6).points));
  ASSERT_EQ(run({"compute", pts, "--exact"}), cli::kOk);
  auto a = report();
  ASSERT_EQ(run({"compute", pts, "--exact"}), cli::kOk);
  auto b = report();
  EXPECT_TRUE(a.contains("timing_ms"));
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  ASSERT_EQ(run({"compute", pts}), cli::kOk);
  EXPECT_NE(report()["input_digest"], a["input_digest"]);
}

TEST_F(CliTest, AbstractExamples) {
  const auto lines = write("lines.txt", "3 2\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(run({"abstract", lines, "--oracle"}), cli::kNegativeVerdict);
  auto r = report();
  EXPECT_EQ(r["outcome"]["type"], "no_centerpoint");
  EXPECT_TRUE(r["oracle"]["agrees"].get<bool>());
  EXPECT_EQ(r["oracle"]["centerpoints"], Json::array());

  const auto two = write("two.txt", "5 2\n0 1 2\n2 3 4\n");
  EXPECT_EQ(run({"abstract", two, "--oracle", "--check"}), cli::kOk);
  r = report();
  EXPECT_EQ(r["outcome"]["element"], 2);
  EXPECT_TRUE(r["check"]["ok"].get<bool>());

  const auto light = write("light.txt", "6 3\n0 1\n2 3 4\n");
  EXPECT_EQ(run({"abstract", light}), cli::kOk);
  EXPECT_EQ(report()["outcome"]["element"], 0);

  const auto bad = write("bad.txt", "4 2\n1 2\n1 2 3\n");
  EXPECT_EQ(run({"abstract", bad, "--check"}), cli::kPropertyViolation);
  EXPECT_EQ(report()["check"]["violation"], (Json{0, 1}));
  // Without --check the solver itself trips over two heavy sets sharing two elements.
  const auto heavy_overlap = write("heavy.txt", "4 2\n0 1 2\n0 1 3\n");
  EXPECT_EQ(run({"abstract", heavy_overlap}), cli::kPropertyViolation);
}

TEST_F(CliTest, ErrorExitCodes) {
  EXPECT_EQ(run({}), cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}), cli::kParseError);
  EXPECT_EQ(run({"compute", (dir_ / "missing.txt").string()}), cli::kParseError);
  const auto garbled = write("g.txt", "2 2\n0 0\n");
  EXPECT_EQ(run({"compute", garbled}), cli::kParseError);
  const auto pts = write("p.txt", "3 2\n0 0 0\n1 1 1\n");
  EXPECT_EQ(run({"compute", pts, "--family", "nope"}), cli::kParseError);
  EXPECT_EQ(run({"compute", pts, "--family", "downward-triangle"}), cli::kDimensionError);
  const auto normals = write("n.txt", "2 1\n1 0\n");
  EXPECT_EQ(run({"compute", pts, "--family", "custom:" + normals}), cli::kDimensionError);
  const auto frac = write("f.txt", "2 1\n0.5 0\n");
  EXPECT_EQ(run({"compute", frac, "--exact"}), cli::kParseError);
  EXPECT_EQ(run({"plot", pts, "--svg", (dir_ / "x.svg").string()}), cli::kDimensionError);
  EXPECT_EQ(run({"generate", "tightness", "--n", "7"}), cli::kParseError);
}

TEST_F(CliTest, GenerateAndIncidence) {
  ASSERT_EQ(run({"generate", "random", "--seed", "5", "--n", "6", "--d", "2", "--k", "3"}), cli::kOk);
  EXPECT_EQ(out_, io::format_points(random_instance(5, 6, 2, 3).points));
  ASSERT_EQ(run({"generate", "degenerate", "--kind", "all-coincident", "--n", "3"}), cli::kOk);
  EXPECT_EQ(out_, "2 3\n3 -2\n3 -2\n3 -2\n");
  const auto tri = write("tri.txt", "2 3\n0 0\n5 0\n1 4\n");
  ASSERT_EQ(run({"incidence", tri}), cli::kOk);
  EXPECT_EQ(out_, "3 2\n0 1\n0 2\n1 2\n");
}

TEST_F(CliTest, PlotWritesSvg) {
  const auto pts = write("one.txt", "2 1\n0 0\n");
  const auto svg = (dir_ / "one.svg").string();
  ASSERT_EQ(run({"plot", pts, "--svg", svg}), cli::kOk) << err_;
  const auto text = io::read_text(svg);
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

TEST(Svg, SinglePointHasOneMarker) {
  const PointSetd p{{0.0}, {0.0}};
  const auto svg = render_svg(p, axis_box_family(2), compute_strong_centerpoint(p, axis_box_family(2)));
  EXPECT_EQ(count_matches(svg, "<circle"), 1u);
  EXPECT_EQ(count_matches(svg, "class=\"chosen\""), 1u);
}

TEST(Svg, TightnessShowsFourClustersAndRegion) {
  const auto inst = tightness_instance(axis_box_family(2), 8);
  const auto svg =
      render_svg(inst.points, inst.family, compute_strong_centerpoint(inst.points, inst.family));
  EXPECT_EQ(count_matches(svg, "<circle"), 4u);
  EXPECT_EQ(count_matches(svg, "data-multiplicity=\"2\""), 4u);
  EXPECT_EQ(count_matches(svg, "class=\"region-E\""), 1u);
  EXPECT_EQ(count_matches(svg, "class=\"boundary\""), 4u);
}

TEST(Svg, DownwardTriangleHasThreeBoundaryLines) {
  const auto inst = tightness_instance(downward_triangle_family(), 6);
  const auto svg =
      render_svg(inst.points, inst.family, compute_strong_centerpoint(inst.points, inst.family));
  EXPECT_EQ(count_matches(svg, "class=\"boundary\""), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(count_matches(svg, "data-orientation=\"" + std::to_string(i) + "\""), 1u);
  }
}

}  // namespace
}  // namespace strongcp
