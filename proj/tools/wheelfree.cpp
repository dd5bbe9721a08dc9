#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wheelfree/cli.hpp"

namespace wf = wheelfree;

int main(int argc, char** argv) {
  CLI::App app{"wheelfree: wheel-free planar graph checks, decompositions and colourings"};
  app.require_subcommand(1);

  wf::cli::Options opts;
  opts.threads = wf::cli::default_threads();
  std::string format = "graph6";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "input format")->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_flag("--json", opts.json, "structured report");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-ms", opts.budget_ms, "wheel search budget in milliseconds")->check(CLI::PositiveNumber);
  };

  std::string path, second;
  int cap = 0;
  wf::cli::GenerateOptions gen;

  auto* check = app.add_subcommand("check", "report planarity, connectivity, patterns, wheels and basic-graph tests");
  check->add_option("graph", path, "graph file")->required();
  add_common(check);
  add_budget(check);

  auto* color = app.add_subcommand("color", "3-colour a wheel-free planar graph");
  color->add_option("graph", path, "graph file")->required();
  add_common(color);
  add_budget(color);

  auto* edge_color = app.add_subcommand("edge-color", "3-edge-colour an almost chordless subcubic graph");
  edge_color->add_option("graph", path, "graph file")->required();
  add_common(edge_color);

  auto* decompose = app.add_subcommand("decompose", "split a 3-connected wheel-free planar graph into basic graphs");
  decompose->add_option("graph", path, "graph file")->required();
  add_common(decompose);
  add_budget(decompose);

  auto* replay = app.add_subcommand("replay", "rebuild a graph from a decomposition tree");
  replay->add_option("tree", path, "decomposition JSON")->required();
  replay->add_option("--against", second, "graph file to compare with (isomorphism)");
  add_common(replay);

  auto* generate = app.add_subcommand("generate", "emit class members built by gluing basic graphs");
  generate->add_option("seeds", gen.names, "seed names (K4, prism, cube, K23)")->required();
  generate->add_option("--glues", gen.glues, "number of gluings")->check(CLI::NonNegativeNumber);
  generate->add_option("--rng", gen.rng, "random seed");
  generate->add_option("--count", gen.count, "number of graphs")->check(CLI::NonNegativeNumber);
  generate->add_option("--catalog", gen.catalog_path, "extra cubic planar seeds (graph6)");
  generate->add_flag("--json", opts.json, "structured errors");

  auto* verify = app.add_subcommand("verify", "check a vertex or edge colouring file against a graph");
  verify->add_option("graph", path, "graph file")->required();
  verify->add_option("coloring", second, "colouring file")->required();
  verify->add_option("--cap", cap, "maximum number of colours allowed (0: no limit)")->check(CLI::NonNegativeNumber);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : wf::cli::parse_error;
  }
  opts.format = format == "edgelist" ? wf::GraphFormat::edgelist : wf::GraphFormat::graph6;

  wf::cli::Result r;
  if (*check) r = wf::cli::cmd_check(path, opts);
  else if (*color) r = wf::cli::cmd_color(path, opts);
  else if (*edge_color) r = wf::cli::cmd_edge_color(path, opts);
  else if (*decompose) r = wf::cli::cmd_decompose(path, opts);
  else if (*replay) r = wf::cli::cmd_replay(path, second, opts);
  else if (*generate) r = wf::cli::cmd_generate(gen, opts);
  else if (*verify) r = wf::cli::cmd_verify(path, second, cap, opts);

  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
