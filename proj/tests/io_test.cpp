#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "ldam/families.hpp"
#include "ldam/io.hpp"
#include "ldam/sweep.hpp"
#include "test_util.hpp"

namespace {

using ldam::build_graph;
using ldam::FamilySpec;
using ldam::Graph;
using ldam::parse_edge_list;
using ldam::ParseError;
using ldam::write_edge_list;

TEST(EdgeList, ParseK2) {
  Graph g = parse_edge_list("2 1\n0 1");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(EdgeList, WriteStar3) {
  auto star = build_graph(FamilySpec::star(3));
  EXPECT_EQ(write_edge_list(star.graph), "4 3\n0 1\n0 2\n0 3\n");
}

TEST(EdgeList, DistinctParseErrors) {
  auto kind_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "expected a parse error for: " << text;
    return ParseError::Kind::malformed_header;
  };
  EXPECT_EQ(kind_of("3 1\n0 5"), ParseError::Kind::out_of_range);
  EXPECT_EQ(kind_of(""), ParseError::Kind::malformed_header);
  EXPECT_EQ(kind_of("3"), ParseError::Kind::malformed_header);
  EXPECT_EQ(kind_of("a b\n"), ParseError::Kind::malformed_header);
  EXPECT_EQ(kind_of("0 0\n"), ParseError::Kind::malformed_header);
  EXPECT_EQ(kind_of("3 2\n0 1"), ParseError::Kind::malformed_line);
  EXPECT_EQ(kind_of("3 1\n0 1 2"), ParseError::Kind::malformed_line);
  EXPECT_EQ(kind_of("3 1\n0 x"), ParseError::Kind::malformed_line);
  EXPECT_EQ(kind_of("3 1\n1 1"), ParseError::Kind::self_loop);
  EXPECT_EQ(kind_of("3 2\n0 1\n1 0"), ParseError::Kind::duplicate_edge);
}

TEST(EdgeList, RoundTripOnFamiliesAndRandoms) {
  std::vector<FamilySpec> specs = {
      FamilySpec::star(7),         FamilySpec::subdivided_star(5),
      FamilySpec::bistar(4),       FamilySpec::double_star(3, 6),
      FamilySpec::subdivided_bistar(5), FamilySpec::shadow_bistar(3),
      FamilySpec::complete(8),     FamilySpec::complete_bipartite(4, 5),
      FamilySpec::complete_tripartite(3, 4, 5),
      FamilySpec::complete_multipartite_equal(4, 2),
      FamilySpec::turan(10, 4),    FamilySpec::friendship(5),
      FamilySpec::ladder(6),       FamilySpec::star_corona_null(4, 3),
      FamilySpec::complete_corona_null(4, 2),
      FamilySpec::friendship_corona_null(3, 2)};
  for (const auto& spec : specs) {
    Graph g = build_graph(spec).graph;
    EXPECT_TRUE(parse_edge_list(write_edge_list(g)) == g) << spec.to_string();
  }
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = ldam_test::random_connected_graph(2 + static_cast<int>(rng() % 10), 0.3, rng);
    EXPECT_TRUE(parse_edge_list(write_edge_list(g)) == g);
  }
}

TEST(LabelingFile, RoundTripAndErrors) {
  ldam::Labeling f = {3, 1, 4, 2};
  EXPECT_EQ(ldam::write_labeling(f), "3 1 4 2\n");
  EXPECT_EQ(ldam::parse_labeling("3 1 4 2\n"), f);
  EXPECT_THROW(ldam::parse_labeling("1 2\n3"), ParseError);
  EXPECT_THROW(ldam::parse_labeling("0 1 2"), ParseError);
  EXPECT_THROW(ldam::parse_labeling("1 2 9"), ParseError);
  EXPECT_THROW(ldam::parse_labeling("1 2 x"), ParseError);
}

TEST(LayoutFile, Format) {
  auto star = build_graph(FamilySpec::star(2));
  EXPECT_EQ(ldam::write_layout(star.layout), "0 c\n1 v 1\n2 v 2\n");
  auto corona = build_graph(FamilySpec::star_corona_null(2, 1));
  EXPECT_EQ(ldam::write_layout(corona.layout), "0 c\n1 v 1\n2 v 2\n3 c 1\n4 v 1 1\n5 v 2 1\n");
}

TEST(ExportDot, AnnotatesLabelsWeightsAndClasses) {
  Graph k2 = ldam::path_graph(2);
  ldam::Labeling f = {1, 2};
  std::string dot = ldam::export_dot(k2, &f);
  EXPECT_NE(dot.find("f=1\\nw=2"), std::string::npos);
  EXPECT_NE(dot.find("f=2\\nw=1"), std::string::npos);
  EXPECT_NE(dot.find("v0 -- v1"), std::string::npos);

  // the 4 leaves of the star share one fill color, the center another
  auto star = build_graph(FamilySpec::star(4));
  ldam::Labeling sf = {5, 1, 2, 3, 4};
  std::string star_dot = ldam::export_dot(star.graph, &sf);
  std::map<std::string, int> fill_count;
  std::size_t pos = 0;
  while ((pos = star_dot.find("fillcolor=\"", pos)) != std::string::npos) {
    pos += 11;
    fill_count[star_dot.substr(pos, 7)]++;
  }
  ASSERT_EQ(fill_count.size(), 2u);
  std::vector<int> counts;
  for (auto& [color, count] : fill_count) counts.push_back(count);
  std::sort(counts.begin(), counts.end());
  EXPECT_EQ(counts, (std::vector<int>{1, 4}));

  // identical calls produce identical text
  EXPECT_EQ(ldam::export_dot(star.graph, &sf), star_dot);

  std::string plain = ldam::export_dot(star.graph);
  EXPECT_EQ(plain.find("fillcolor"), std::string::npos);
  EXPECT_NE(plain.find("v0 -- v1"), std::string::npos);

  ldam::Labeling bad = {1, 2, 3, 4, 4};
  EXPECT_THROW(ldam::export_dot(star.graph, &bad), ldam::DomainError);
}

TEST(SweepReport, SchemaStability) {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 6; ++n) specs.push_back(FamilySpec::star(n));
  for (int n = 3; n <= 5; ++n) specs.push_back(FamilySpec::ladder(n));
  ldam::SweepReport report = ldam::run_sweep(specs);
  nlohmann::json j = ldam::sweep_report_json(report);
  EXPECT_EQ(j["schema"], "ldam-sweep-v1");
  ASSERT_EQ(j["entries"].size(), specs.size());
  const std::vector<std::string> required = {
      "family",        "params",        "spec",
      "n_vertices",    "claim",         "case_tag",
      "achieved_color_count", "verifier_valid", "solver_value",
      "solver_complete", "status",      "confirmation",
      "detail",        "color_report",  "repair"};
  for (const auto& entry : j["entries"]) {
    for (const auto& field : required)
      EXPECT_TRUE(entry.contains(field)) << "missing " << field << " in " << entry["spec"];
    for (const auto& field : {"value", "kind", "theorem"})
      EXPECT_TRUE(entry["claim"].contains(field));
  }
  EXPECT_TRUE(j.contains("notes"));
  EXPECT_TRUE(j["summary"].contains("confirmed"));
  // entries are ordered by family then parameters
  EXPECT_EQ(j["entries"][0]["spec"], "Star(n=2)");
  EXPECT_EQ(j["entries"][0]["status"], "Discrepancy");
  EXPECT_EQ(j["entries"][1]["status"], "Confirmed");
}

TEST(SweepReport, StatusRules) {
  auto report = ldam::run_sweep({FamilySpec::ladder(4), FamilySpec::star(5),
                                 FamilySpec::complete_bipartite(14, 6)});
  ASSERT_EQ(report.entries.size(), 3u);
  EXPECT_EQ(report.entries[0].status, ldam::SweepStatus::confirmed);    // Star(5)
  EXPECT_EQ(report.entries[1].status, ldam::SweepStatus::discrepancy);  // K(14,6)
  EXPECT_TRUE(report.entries[1].repair.found);
  EXPECT_EQ(report.entries[2].status, ldam::SweepStatus::upper_bound_only);  // Ladder(4)
  EXPECT_TRUE(report.any_discrepancy());

  auto clean = ldam::run_sweep({FamilySpec::star(5)});
  EXPECT_FALSE(clean.any_discrepancy());
}

TEST(SweepReport, SolverOptIn) {
  ldam::SweepOptions options;
  options.use_solver = true;
  auto report = ldam::run_sweep({FamilySpec::star(4), FamilySpec::ladder(3),
                                 FamilySpec::star(30)},
                                options);
  ASSERT_EQ(report.entries.size(), 3u);
  const auto& small = report.entries[0];  // Star(4), 5 vertices
  ASSERT_TRUE(small.solver_value.has_value());
  EXPECT_EQ(*small.solver_value, 2);
  EXPECT_EQ(small.confirmation, "solver-exact");
  const auto& big = report.entries[1];  // Star(30), beyond the cap
  EXPECT_FALSE(big.solver_value.has_value());
  EXPECT_EQ(big.confirmation, "at-tested-scale");
  const auto& ladder = report.entries[2];  // Ladder(3): bound is tight
  ASSERT_TRUE(ladder.solver_value.has_value());
  EXPECT_EQ(*ladder.solver_value, 4);
  EXPECT_NE(ladder.detail.find("tight"), std::string::npos);
}

#ifdef LDAM_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(LDAM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("sweep --family Star --n 3..6"), 0);
  EXPECT_EQ(run_cli("sweep --family Star --n 2..6"), 1);  // Star(2) discrepancy
  EXPECT_EQ(run_cli("definitely-not-a-verb"), 2);
  EXPECT_EQ(run_cli("gen --family Star"), 2);       // missing --n
  EXPECT_EQ(run_cli("gen --family Nope --n 3"), 2);
}

TEST(Cli, GenConstructVerifyPipeline) {
  std::string dir = ::testing::TempDir();
  std::string graph_path = dir + "/star4.txt";
  std::string labeling_path = dir + "/star4_labeling.txt";
  ASSERT_EQ(run_cli("gen --family Star --n 4 --out " + graph_path), 0);
  ASSERT_EQ(run_cli("construct --family Star --n 4 --out " + labeling_path), 0);
  EXPECT_EQ(run_cli("verify --graph " + graph_path + " --labeling " + labeling_path), 0);
  EXPECT_EQ(run_cli("chi-ld --graph " + graph_path), 0);
  EXPECT_EQ(run_cli("export-dot --family Star --n 4 --construct"), 0);

  std::ofstream bad(labeling_path);
  bad << "1 2 3\n";  // wrong length for the 5-vertex star
  bad.close();
  EXPECT_EQ(run_cli("verify --graph " + graph_path + " --labeling " + labeling_path), 2);
}

TEST(Cli, ConstructReportsDiscrepancies) {
  // the Star(2) pattern conflicts; construct surfaces it and exits 1
  EXPECT_EQ(run_cli("construct --family Star --n 2"), 1);
  EXPECT_EQ(run_cli("construct --family Star --n 3"), 0);
  EXPECT_EQ(run_cli("construct --family Star --n 1"), 2);  // below the claim domain
}

TEST(Cli, ReportDirEnvironmentVariable) {
  std::string dir = ::testing::TempDir();
  std::string cmd = "LDAM_REPORT_DIR=" + dir + " " + std::string(LDAM_CLI_PATH) +
                    " sweep --family Star --n 4..6 >/dev/null 2>&1";
  ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  std::ifstream report(dir + "/sweep.json");
  ASSERT_TRUE(report.good());
  std::string text((std::istreambuf_iterator<char>(report)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("ldam-sweep-v1"), std::string::npos);
}
#endif

}  // namespace
