#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "octekg/df_builder.hpp"
#include "octekg/export.hpp"
#include "octekg/log.hpp"
#include "octekg/ocel_json.hpp"
#include "octekg/transform.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw octekg::Error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw octekg::Error("cannot open output file: " + path);
  out << content;
  if (!out) throw octekg::Error("failed writing output file: " + path);
}

octekg::OcelLog load_log(const std::string& path) {
  octekg::log_info("reading " + path);
  return octekg::parse_ocel_json(read_file(path));
}

int run_transform(const std::string& input, const std::string& output,
                  const std::string& format_name, bool reify_update_edges, bool class_dfc) {
  const auto format = octekg::export_format_from_name(format_name);
  octekg::OcelLog log = load_log(input);
  octekg::TransformConfig config;
  config.reify_update_edges = reify_update_edges;
  config.include_class_dfc = class_dfc;
  octekg::Graph graph = octekg::transform(log, config);
  octekg::log_info("graph has " + std::to_string(graph.node_count()) + " nodes, " +
                   std::to_string(graph.edge_count()) + " edges");
  write_file(output, octekg::export_graph(graph, *format));
  return 0;
}

int run_validate(const std::string& input) {
  try {
    load_log(input);
  } catch (const octekg::LogInvalidError& e) {
    for (const auto& v : e.violations()) {
      std::cout << v.constraint << ": " << v.message << "\n";
    }
    return 1;
  } catch (const octekg::ParseError& e) {
    std::cout << e.path() << ": " << e.what() << "\n";
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int run_stats(const std::string& input) {
  octekg::OcelLog log = load_log(input);
  octekg::Graph graph = octekg::transform(log);
  std::cout << octekg::stats_to_json(octekg::compute_stats(graph));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ocel2tekg: turn OCEL 2.0 event logs into temporal event knowledge graphs"};
  app.require_subcommand(1);

  std::string input, output;
  std::string format = "jsonl";
  bool reify_update_edges = false;
  bool class_dfc = false;

  CLI::App* transform = app.add_subcommand("transform", "transform a log and export the graph");
  transform->add_option("input", input, "OCEL 2.0 JSON file (.jsonocel / .json)")->required();
  transform->add_option("--out", output, "output file")->required();
  transform->add_option("--format", format, "cypher, graphml or jsonl")
      ->check(CLI::IsMember({"cypher", "graphml", "jsonl"}));
  transform->add_flag("--reify-update-edges", reify_update_edges,
                      "also reify snapshot update edges");
  transform->add_flag("--class-dfc", class_dfc, "derive dfc edges between classes");

  CLI::App* validate = app.add_subcommand("validate", "check a log against the OCEL constraints");
  validate->add_option("input", input, "OCEL 2.0 JSON file")->required();

  CLI::App* stats = app.add_subcommand("stats", "print graph statistics for a transformed log");
  stats->add_option("input", input, "OCEL 2.0 JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (transform->parsed()) {
      return run_transform(input, output, format, reify_update_edges, class_dfc);
    }
    if (validate->parsed()) return run_validate(input);
    if (stats->parsed()) return run_stats(input);
  } catch (const octekg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
