#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "raag/families.hpp"
#include "raag/graph.hpp"
#include "raag/report.hpp"
#include "raag/words.hpp"

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_input_error = 2;

raag::SimplicialGraph read_graph(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw raag::error("cannot open '" + path + "'");

  std::ostringstream text;
  text << in.rdbuf();
  try {
    return raag::parse_graph(text.str());
  } catch (raag::parse_error const &e) {
    throw raag::parse_error(path + ": " + e.what());
  }
}

std::vector<std::size_t> parse_list(std::string const &text)
{
  std::vector<std::size_t> res;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &pos);
    } catch (std::exception const &) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || item.front() == '-')
      throw raag::precondition_error("bad list entry '" + item + "'");
    res.push_back(static_cast<std::size_t>(value));
  }
  return res;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Automorphism analysis for right-angled Artin groups"};
  app.require_subcommand(1);

  std::size_t max_vertices = raag::default_max_vertices;
  std::uint64_t seed = 0;
  app.add_option("--max-vertices", max_vertices,
                 "Vertex bound for graph automorphism search")
    ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized checks")
    ->capture_default_str();

  std::string analyze_path;
  auto *analyze = app.add_subcommand("analyze", "Analyze a graph file");
  analyze->add_option("path", analyze_path, "Graph file")->required();

  auto *generate = app.add_subcommand("generate", "Emit a witness graph");
  generate->require_subcommand(1);
  auto *gen_frucht = generate->add_subcommand("frucht", "The Frucht graph");
  std::string spokes;
  auto *gen_hub = generate->add_subcommand("cycle-hub",
                                           "Cycle with a spoked hub");
  gen_hub->add_option("--spokes", spokes, "e_1,...,e_t")->required();
  std::size_t join_k = 0;
  std::string join_sizes;
  auto *gen_join = generate->add_subcommand(
    "join-complete", "Join of K_k with disjoint cliques");
  gen_join->add_option("--k", join_k, "Number of social vertices")
    ->required();
  gen_join->add_option("--sizes", join_sizes, "Clique sizes")->required();

  std::string verify_which;
  auto *verify = app.add_subcommand("verify", "Run a verification harness");
  verify->add_option("which", verify_which, "Harness to run")
    ->required()
    ->check(CLI::IsMember(raag::verify_targets()));

  std::string nf_path, nf_word;
  auto *nf = app.add_subcommand("nf", "Print the normal form of a word");
  nf->add_option("path", nf_path, "Graph file")->required();
  nf->add_option("word", nf_word, "Word, e.g. 'a b^-1 a'")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*analyze) {
      raag::AnalyzeOptions opts;
      opts.max_vertices = max_vertices;
      std::cout << raag::analyze_report(read_graph(analyze_path), opts);
      return exit_ok;
    }

    if (*generate) {
      raag::SimplicialGraph g;
      if (*gen_frucht)
        g = raag::frucht();
      else if (*gen_hub)
        g = raag::cycle_hub(raag::SpokeSet{parse_list(spokes)});
      else if (*gen_join)
        g = raag::join_complete(join_k, parse_list(join_sizes));
      std::cout << raag::format_graph(g);
      return exit_ok;
    }

    if (*verify) {
      auto result = raag::run_verify(verify_which, seed);
      std::cout << result.render();
      return result.passed() ? exit_ok : exit_verification_failed;
    }

    if (*nf) {
      auto g = read_graph(nf_path);
      auto form = raag::normal_form(g, raag::parse_word(g, nf_word));
      std::cout << raag::format_word(g, form.word()) << '\n';
      return exit_ok;
    }
  } catch (raag::verification_failure const &e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return exit_verification_failed;
  } catch (raag::error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  return exit_input_error;
}
