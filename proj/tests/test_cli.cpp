#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "wheelfree/cli.hpp"
#include "wheelfree/named.hpp"

using namespace wheelfree;
using namespace wheelfree::cli;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(WHEELFREE_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("wheelfree_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

Options json_opts() {
  Options o;
  o.json = true;
  return o;
}

}  // namespace

TEST(Check, Prism) {
  const Result r = cmd_check(data("prism.g6"), {});
  EXPECT_EQ(r.exit_code, ok);
  EXPECT_NE(r.out.find("planar: yes"), std::string::npos);
  EXPECT_NE(r.out.find("connectivity: 3"), std::string::npos);
  EXPECT_NE(r.out.find("wheel: absent"), std::string::npos);
  EXPECT_NE(r.out.find("basic-by-definition: yes"), std::string::npos);
  EXPECT_NE(r.out.find("basic-by-characterization: yes"), std::string::npos);
  EXPECT_NE(r.out.find("basic-by-class: yes"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: wheel-free planar"), std::string::npos);
}

TEST(Check, NegativeVerdicts) {
  const Result w5 = cmd_check(data("w5.g6"), {});
  EXPECT_EQ(w5.exit_code, negative);
  EXPECT_NE(w5.out.find("wheel: WHEEL 5 "), std::string::npos);
  EXPECT_EQ(cmd_check(data("k5.g6"), {}).exit_code, negative);
}

TEST(Check, JsonReport) {
  const Result r = cmd_check(data("glued_prisms.g6"), json_opts());
  ASSERT_EQ(r.exit_code, ok);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("n"), 9);
  EXPECT_EQ(j.at("planar"), true);
  EXPECT_EQ(j.at("wheel").at("status"), "absent");
  EXPECT_EQ(j.at("clique_cutset"), "CUTSET 0 1 2");
  EXPECT_EQ(j.at("basic").at("class"), "false");
  EXPECT_TRUE(j.at("timings_ms").contains("total"));
  EXPECT_EQ(j.at("input_digest"), digest(read_graph_file(data("glued_prisms.g6"), GraphFormat::graph6)));
}

TEST(Check, BudgetExhaustion) {
  const std::string big = temp_file("big.g6", write_graph6(generate_member(seed_catalog(), {"cube"}, 3, 1)) + "\n");
  Options o;
  o.budget_ms = 0;
  EXPECT_EQ(cmd_check(big, o).exit_code, budget);
}

TEST(Check, ParseErrors) {
  EXPECT_EQ(cmd_check(data("bad.g6"), {}).exit_code, parse_error);
  EXPECT_EQ(cmd_check(data("missing.g6"), {}).exit_code, parse_error);
  const Result r = cmd_check(data("bad.g6"), json_opts());
  EXPECT_EQ(json::parse(r.out).at("error").at("class"), "parse");
}

TEST(Color, ProducesVerifiedColouring) {
  const Result r = cmd_color(data("glued_prisms.g6"), {});
  ASSERT_EQ(r.exit_code, ok) << r.err;
  EXPECT_NE(r.out.find("# colors: 3"), std::string::npos);
  EXPECT_NE(r.out.find("# verified: yes"), std::string::npos);
  const std::string colors = temp_file("glued.colors", r.out);
  EXPECT_EQ(cmd_verify(data("glued_prisms.g6"), colors, 3, {}).exit_code, ok);
  EXPECT_EQ(cmd_color(data("glued_prisms.g6"), {}).out, r.out);
}

TEST(Color, EdgeListInput) {
  Options o;
  o.format = GraphFormat::edgelist;
  const Result r = cmd_color(data("c5.edges"), o);
  EXPECT_EQ(r.exit_code, ok);
  EXPECT_NE(r.out.find("# colors: 3"), std::string::npos);
}

TEST(Color, RejectsWheelWithWitness) {
  const Result r = cmd_color(data("w5.g6"), {});
  EXPECT_EQ(r.exit_code, out_of_class);
  EXPECT_NE(r.err.find("WHEEL 5"), std::string::npos);
  const json j = json::parse(cmd_color(data("k4.g6"), json_opts()).out);
  EXPECT_EQ(j.at("error").at("class"), "out-of-class");
  EXPECT_TRUE(j.at("error").contains("certificate"));
  EXPECT_EQ(cmd_color(data("k5.g6"), {}).exit_code, out_of_class);
}

TEST(Color, JsonReport) {
  const json j = json::parse(cmd_color(data("prism.g6"), json_opts()).out);
  EXPECT_EQ(j.at("verified"), true);
  EXPECT_EQ(j.at("coloring").size(), 6u);
  EXPECT_EQ(j.at("fallbacks").at("vertex"), 0);
}

TEST(EdgeColor, Examples) {
  const Result d = cmd_edge_color(data("diamond.g6"), {});
  ASSERT_EQ(d.exit_code, ok);
  EXPECT_NE(d.out.find("# colors: 3"), std::string::npos);
  const std::string colors = temp_file("diamond.colors", d.out);
  EXPECT_EQ(cmd_verify(data("diamond.g6"), colors, 3, {}).exit_code, ok);

  const Result k4 = cmd_edge_color(data("k4.g6"), {});
  EXPECT_EQ(k4.exit_code, out_of_class);
  EXPECT_NE(k4.err.find("CHORDS"), std::string::npos);
  EXPECT_EQ(cmd_edge_color(data("w5.g6"), {}).exit_code, out_of_class);
}

TEST(Decompose, RoundTripThroughReplay) {
  const Result d = cmd_decompose(data("glued_prisms.g6"), {});
  ASSERT_EQ(d.exit_code, ok);
  const std::string tree = temp_file("glued.json", d.out);
  const Result r = cmd_replay(tree, data("glued_prisms.g6"), {});
  EXPECT_EQ(r.exit_code, ok);
  EXPECT_NE(r.out.find("isomorphic: yes"), std::string::npos);
  EXPECT_EQ(cmd_replay(tree, data("prism.g6"), {}).exit_code, negative);

  const std::string wrapped = temp_file("wrapped.json", cmd_decompose(data("glued_prisms.g6"), json_opts()).out);
  EXPECT_EQ(cmd_replay(wrapped, data("glued_prisms.g6"), {}).exit_code, ok);
  EXPECT_EQ(cmd_replay(temp_file("junk.json", "{"), "", {}).exit_code, parse_error);
}

TEST(Decompose, OutOfClass) {
  EXPECT_EQ(cmd_decompose(data("w5.g6"), {}).exit_code, out_of_class);
  EXPECT_EQ(cmd_decompose(data("k5.g6"), {}).exit_code, out_of_class);
}

TEST(Generate, DeterministicAndInClass) {
  GenerateOptions go;
  go.names = {"K4", "prism"};
  go.glues = 2;
  go.rng = 7;
  go.count = 3;
  const Result a = cmd_generate(go, {});
  ASSERT_EQ(a.exit_code, ok);
  EXPECT_EQ(a.out, cmd_generate(go, {}).out);
  std::istringstream lines(a.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    const std::string f = temp_file("gen" + std::to_string(n) + ".g6", line + "\n");
    EXPECT_EQ(cmd_check(f, {}).exit_code, ok);
  }
  EXPECT_EQ(n, 3);

  go.names = {"nope"};
  EXPECT_EQ(cmd_generate(go, {}).exit_code, parse_error);
}

TEST(Generate, ExtraCatalog) {
  GenerateOptions go;
  go.names = {"import0"};
  go.catalog_path = temp_file("catalog.g6", write_graph6(named::prism()) + "\n");
  const Result r = cmd_generate(go, {});
  ASSERT_EQ(r.exit_code, ok) << r.err;
  EXPECT_EQ(read_graph6(r.out.substr(0, r.out.find('\n'))).vertex_count(), 18);
}

TEST(Verify, Outcomes) {
  EXPECT_EQ(cmd_verify(data("prism.g6"), data("prism.colors"), 3, {}).exit_code, ok);
  EXPECT_EQ(cmd_verify(data("prism.g6"), data("prism.colors"), 2, {}).exit_code, negative);
  EXPECT_EQ(cmd_verify(data("prism.g6"), data("prism_bad.colors"), 0, {}).exit_code, negative);
  EXPECT_EQ(cmd_verify(data("prism.g6"), data("prism_partial.colors"), 0, {}).exit_code, out_of_class);
  EXPECT_EQ(cmd_verify(data("prism.g6"), temp_file("mixed.colors", "0 1\n1 2 3\n"), 0, {}).exit_code, parse_error);
  const json j = json::parse(cmd_verify(data("prism.g6"), data("prism.colors"), 3, json_opts()).out);
  EXPECT_EQ(j.at("kind"), "vertex");
  EXPECT_EQ(j.at("proper"), true);
}

TEST(Digest, StableAndDistinct) {
  EXPECT_EQ(digest(named::prism()).size(), 16u);
  EXPECT_EQ(digest(named::prism()), digest(named::prism()));
  EXPECT_NE(digest(named::prism()), digest(named::complete(4)));
}
