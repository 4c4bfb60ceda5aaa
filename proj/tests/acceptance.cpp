// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance <path to raag executable>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/decomposition.hpp"
#include "raag/families.hpp"
#include "raag/graph.hpp"
#include "raag/pc_bounds.hpp"
#include "raag/report.hpp"
#include "raag/words.hpp"

#include "cli_support.hpp"
#include "test_support.hpp"

using raag::BigInt;
using raag::SimplicialGraph;
using raag::Vertex;

namespace
{

std::string cli_path;

struct Outcome
{
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, std::string const &what)
  {
    if (!condition) {
      passed = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

template<typename T>
std::string str(T const &x)
{
  std::ostringstream out;
  out << x;
  return out.str();
}

// Frucht graph austere, |Out(Out(A_Γ))| = |GL(12, Z_2)|.
void frucht_out_out(Outcome &o)
{
  auto cli = cli_support::run(cli_support::quote(cli_path) +
                              " verify theorem-b");
  o.require(cli.exit_code == 0, "verify theorem-b exited " +
                                  str(cli.exit_code));
  o.require(cli.out.find("theorem-b: PASS") != std::string::npos,
            "verify theorem-b did not report PASS");

  auto f = raag::frucht();
  auto aus = raag::austerity(f);
  o.require(aus.asymmetric, "Frucht graph has a symmetry");
  o.require(aus.dominated_free, "Frucht graph has a dominated vertex");
  auto counts = raag::star_cut_counts(f);
  o.require(counts.size() == 12 &&
              std::all_of(counts.begin(), counts.end(),
                          [](std::size_t k) { return k == 1; }),
            "some star cut is disconnected");
  o.require(aus.verdict == raag::Austerity::austere, "not austere");

  BigInt expected("6441762292785762141878919881400879415296000");
  auto order = raag::out_out_austere_order(f);
  o.require(order == expected, "order " + str(order));
  o.require(raag::gl_order(12, 2) == expected, "gl_order(12,2) mismatch");

  std::uint64_t frozen[] = {1, 6, 168};
  for (unsigned n = 1; n <= 3; ++n) {
    auto exhaustive = test_support::invertible_gf2_by_cofactors(n);
    o.require(exhaustive == frozen[n - 1] &&
                raag::gl_order(n, 2) == BigInt(exhaustive),
              "gl_order(" + str(n) + ",2) disagrees with exhaustive count");
  }
  o.detail << (o.passed ? "order " + str(order) : "");
}

// Social vertices: m = d sign classes and bound 2^(d-1).
void center_bound(Outcome &o)
{
  struct Case
  {
    std::size_t k;
    std::vector<std::size_t> sizes;
    BigInt bound;
  };
  std::vector<Case> cases{{1, {2, 3}, 2}, {2, {2, 3}, 2}, {1, {2, 3, 4}, 4}};

  for (auto const &c : cases) {
    auto g = raag::share(raag::join_complete(c.k, c.sizes));
    auto d = raag::join_decomposition(g);
    auto sc = raag::sign_classes(d);
    std::string label = "join_complete(" + str(c.k) + ", d=" +
                        str(c.sizes.size()) + ")";

    o.require(sc.m == c.sizes.size(), label + " m=" + str(sc.m));
    auto bound = raag::out_aut_lower_bound_center(g);
    o.require(bound == c.bound, label + " bound " + str(bound));

    std::size_t n = d.delta->num_vertices(), passing = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i)
        signs[i] = (bits >> i) & 1u ? -1 : 1;
      passing += raag::check_sign_matrix_centralizes(d, signs);
    }
    o.require(passing == (std::size_t(1) << sc.m),
              label + " exhaustive count " + str(passing));
    o.detail << (o.passed ? label + " -> " + str(bound) + ", " : "");
  }
}

// Sign-class partition agrees with diagonal-matrix commutation.
void sign_equivalence(Outcome &o)
{
  std::size_t graphs = 0, assignments = 0;
  for (auto const &[name, delta] : raag::delta_corpus()) {
    if (delta.num_vertices() > 6)
      continue;
    auto r = raag::sign_equivalence(delta);
    auto classes = raag::domination_structure(delta).classes.size();
    o.require(r.assignments == (std::size_t(1) << classes),
              name + " enumerated " + str(r.assignments));
    o.require(r.disagreements == 0,
              name + " " + str(r.disagreements) + " disagreements");
    ++graphs;
    assignments += r.assignments;
  }
  o.require(graphs >= 4, "corpus too small");
  o.detail << (o.passed ? str(graphs) + " graphs, " + str(assignments) +
                            " assignments" : "");
}

// Conjugation table for lateral transvections.
void conjugation_table(Outcome &o)
{
  auto rows = raag::verify_conjugation_table();
  o.require(rows.size() == 13, str(rows.size()) + " rows");
  for (auto const &row : rows)
    o.require(row.passed, row.generator + ": " + row.computed);
  o.detail << (o.passed ? "13 rows" : "");
}

// Lateral transvections of join(K2, K2+K3) span Z^10.
void lateral_lattice(Outcome &o)
{
  auto g = raag::share(raag::join(
    {raag::complete_graph({"s", "t"}),
     raag::disjoint_union({raag::complete_graph({"a", "b"}),
                           raag::complete_graph({"x", "y", "z"})})}));
  auto d = raag::join_decomposition(g);
  auto lattice = raag::lateral_transvections(d);
  auto taus = raag::lateral_automorphisms(d, lattice);
  o.require(taus.size() == 10, str(taus.size()) + " lateral transvections");

  for (std::size_t i = 0; i < taus.size(); ++i) {
    for (std::size_t j = i + 1; j < taus.size(); ++j)
      o.require(raag::automorphisms_commute(taus[i], taus[j]),
                raag::describe(*g, lattice.basis[i]) + " and " +
                  raag::describe(*g, lattice.basis[j]) + " do not commute");
  }

  auto tau = [&](char const *s, char const *a) {
    return raag::ls_to_automorphism(
      g, raag::Transvection{g->index_of(s), g->index_of(a)});
  };
  o.require(raag::automorphisms_equal(
              raag::conjugate_automorphism(tau("t", "a"), tau("s", "a")),
              tau("s", "a")),
            "tau_ta tau_sa tau_ta^-1 != tau_sa");

  std::size_t n = g->num_vertices();
  raag::IntMatrix stacked(taus.size(), n * n);
  auto id = raag::IntMatrix::identity(n);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    auto diff = raag::abelianization_matrix(taus[i]) - id;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c)
        stacked(i, r * n + c) = diff(r, c);
    }
  }
  auto rank = raag::rank(stacked);
  o.require(rank == 10, "rank " + str(rank));
  o.require(raag::verify_lateral_lattice(d).passed, "lattice report failed");
  o.detail << (o.passed ? "rank " + str(rank) : "");
}

// Spoke family: austere with star cuts, no SILs, bound 2^(t-1).
void spoke_family(Outcome &o)
{
  std::vector<std::pair<raag::SpokeSet, BigInt>> cases{
    {{{3, 7, 12}}, 4}, {{{3, 7, 12, 18}}, 8}, {{{3, 7, 12, 18, 25}}, 16}};

  for (auto const &[spokes, expected] : cases) {
    auto g = raag::cycle_hub(spokes);
    std::string label = "t=" + str(spokes.t());
    o.require(raag::austerity(g).verdict ==
                raag::Austerity::austere_with_star_cuts,
              label + " verdict");
    o.require(!raag::find_sil(g), label + " has a SIL");
    o.require(raag::star_cut_components(g, g.index_of("c")).size() ==
                spokes.t(),
              label + " hub K_c");
    auto bound = raag::star_cut_bound(g);
    o.require(bound == expected, label + " bound " + str(bound));
    o.detail << (o.passed ? label + " -> " + str(bound) + ", " : "");
  }
}

// Inversions act on partial conjugations by signs; every η_{c,j} respects
// the relations.
void eta_mechanics(Outcome &o)
{
  auto g = raag::share(raag::cycle_hub({{3, 7, 12}}));
  raag::EtaChecker checker(g);
  o.require(checker.inversions_act_by_signs(),
            "some iota_v gamma iota_v^-1 is not gamma^(+-1)");

  std::size_t checks = 0;
  for (Vertex c = 0; c < g->num_vertices(); ++c) {
    for (std::size_t j = 1; j <= checker.count(c); ++j) {
      auto report = checker.check(c, j);
      o.require(report.passed, report.name);
      ++checks;
    }
  }
  o.require(checks == 15, str(checks) + " (c, j) pairs");
  o.detail << (o.passed ? str(checks) + " eta maps" : "");
}

// Word problem against the rewriting oracle.
void word_oracle(Outcome &o)
{
  std::mt19937_64 rng(20240601);
  std::size_t pairs = 0, equal = 0;
  for (auto const &[name, g] : test_support::three_vertex_graphs()) {
    for (int i = 0; i < 250; ++i) {
      auto u = test_support::random_word(3, 6, rng);
      auto w = i % 2 ? test_support::random_rewrite(g, u, 6, 6, rng)
                     : test_support::random_word(3, 6, rng);
      bool expected = test_support::oracle_equal(g, u, w);
      o.require(expected == raag::words_equal(g, u, w),
                name + ": " + raag::format_word(g, u) + " vs " +
                  raag::format_word(g, w));
      ++pairs;
      equal += expected;
    }
  }
  o.detail << (o.passed ? str(pairs) + " pairs, " + str(equal) + " equal, " +
                            "0 discrepancies" : "");
}

// Byte-identical analyze reports.
void determinism(Outcome &o)
{
  cli_support::TempDir dir;
  auto exe = cli_support::quote(cli_path);
  auto gen = cli_support::run(exe + " generate frucht");
  o.require(gen.exit_code == 0, "generate frucht failed");
  auto file = cli_support::quote(dir.write("frucht.graph", gen.out));

  auto first = cli_support::run(exe + " analyze " + file);
  auto second = cli_support::run(exe + " analyze " + file);
  o.require(first.exit_code == 0 && second.exit_code == 0, "analyze failed");
  o.require(!first.out.empty(), "empty report");
  o.require(first.out == second.out, "reports differ");
  o.detail << (o.passed ? str(first.out.size()) + " bytes" : "");
}

std::string trimmed(std::string s)
{
  while (!s.empty() && (s.back() == ' ' || s.back() == ','))
    s.pop_back();
  return s;
}

} // namespace

int main(int argc, char **argv)
{
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <raag executable>\n";
    return 2;
  }
  cli_path = argv[1];

  std::vector<std::pair<std::string, std::function<void(Outcome &)>>>
    criteria{
      {"Frucht graph austere, Out(Out) order = |GL(12,Z2)|", frucht_out_out},
      {"centre bound 2^(d-1) on join_complete", center_bound},
      {"sign classes <=> centralizing sign matrices", sign_equivalence},
      {"lateral transvection conjugation table", conjugation_table},
      {"lateral lattice of join(K2,K2+K3) has rank 10", lateral_lattice},
      {"spoke family star-cut bound 2^(t-1)", spoke_family},
      {"eta relations on spoke graph {3,7,12}", eta_mechanics},
      {"word problem agrees with rewriting oracle", word_oracle},
      {"analyze is deterministic", determinism},
    };

  auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (std::exception const &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << i + 1
              << ": " << criteria[i].first << "  [" << trimmed(o.detail.str())
              << "]\n";
  }

  auto elapsed = std::chrono::duration<double>(
    std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed in " << elapsed << " s\n";
  return failures == 0 ? 0 : 1;
}
