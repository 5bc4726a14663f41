// artk: command-line front end. Exit codes: 0 pass, 1 fail, 2 inconclusive,
// 3 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "artk/toolkit.hpp"

namespace {

constexpr int kUsage = 3;

bool takes_subcommand(const std::string &command)
{
  return command != "decompose" && command != "verify";
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Artin and Coxeter group toolkit"};
  app.require_subcommand(1);

  artk::RunConfig config;
  std::string format = "text";
  std::string out_path;
  std::size_t radius = 0;
  std::map<std::string, std::string> options;

  app.add_option("--cap-braid", config.caps.braid, "largest braid class to search")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-enum", config.caps.enumeration, "largest enumeration (groups, balls)")
      ->check(CLI::PositiveNumber);
  auto *radius_opt = app.add_option("--radius", radius, "ball radius");
  app.add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", config.seed, "seed for sampled checks");
  app.add_option("--out", out_path, "also write the artifact to this file");
  app.add_flag("--timing", config.timing, "report wall-clock time (breaks byte-identity)");
  const std::vector<std::pair<const char *, const char *>> pass_through{
      {"strategy", "star-link or two-deletion"},
      {"pivot", "non-edge s,t splitting W into W_{V-s} and W_{V-t}"},
      {"suite", "verify suite, or all"},
      {"property", "int, int+, int+-, int++"},
      {"subset", "vertex subset {..}"},
      {"side", "coset side: right or left"},
      {"left", "left subset of a double coset"},
      {"right", "right subset of a double coset"},
      {"x", "source subset of a lift"},
      {"y", "target subset of a lift"},
      {"branch", "longest transversal element per tree vertex"},
      {"orders", "cyclic factor orders p,q"},
      {"common", "order of the amalgamated cyclic subgroup"},
      {"samples", "random words in the word-problem suite"},
      {"word-length", "longest random word"},
  };
  for (auto [key, help] : pass_through)
    app.add_option(std::string("--") + key, options[key], help);

  std::vector<std::string> items;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"graph", "show|hash|cliques|star|link|subgraph|nonedges|free-of-infinity GRAPH [ARG]"},
      {"coxeter", "reduce|length|equal|coset|double-coset|enumerate GRAPH [WORD...]"},
      {"artin", "project|section|equal|replay|lift GRAPH [WORD...]"},
      {"parabolic", "contains|subset|intersect|closure|property|cardinality|catalog GRAPH [ARG...]"},
      {"tree", "ball|fix|common|decompose GRAPH [ELEMENT...] --pivot s,t; cyclic --orders p,q"},
      {"cube", "domain|ball|fix|flagcheck GRAPH [ELEMENT]"},
      {"decompose", "GRAPH [--strategy star-link|two-deletion]"},
      {"verify", "GRAPH [--suite NAME]"},
  };
  for (auto const &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("items", items, "subcommand, graph file and arguments");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = *artk::parse_format(format);
  if (radius_opt->count())
    config.radius = radius;
  for (auto const &[k, v] : options)
    if (!v.empty())
      config.options[k] = v;

  std::size_t next = 0;
  if (takes_subcommand(config.command)) {
    bool bare_graph = config.command == "graph" && !items.empty() &&
                      std::filesystem::exists(items.front());
    if (!bare_graph) {
      if (items.empty()) {
        std::cerr << "artk " << config.command << ": missing subcommand\n";
        return kUsage;
      }
      config.subcommand = items[next++];
    }
  }
  bool graphless = config.command == "tree" && config.subcommand == "cyclic";
  if (!graphless && next < items.size())
    config.graph_path = items[next++];
  config.arguments.assign(items.begin() + static_cast<std::ptrdiff_t>(next), items.end());

  try {
    auto report = artk::run(config);
    std::cout << report.render(config.format, config.seed);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "artk: cannot write " << out_path << '\n';
        return kUsage;
      }
      out << report.output;
    }
    return report.exit_code();
  } catch (const artk::UsageError &e) {
    std::cerr << "artk: " << e.what() << '\n';
    return kUsage;
  } catch (const artk::Error &e) {
    // Malformed input (graph file, words, subsets) is a usage error.
    std::cerr << "artk: " << artk::to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "artk: " << e.what() << '\n';
    return kUsage;
  }
}
