#ifndef RAAG_REPORT_HPP
#define RAAG_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "automorphism.hpp"
#include "decomposition.hpp"
#include "domination.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "pc_bounds.hpp"

namespace raag
{

struct AnalyzeOptions
{
  std::size_t max_vertices = default_max_vertices;
};

namespace detail
{

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string format_set(SimplicialGraph const &g, VertexSet const &vs)
{
  std::string res = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    res += (i ? " " : "") + g.name(vs[i]);
  return res + "}";
}

} // namespace detail

/// Plain-text analysis report, one `key: value` per line.
inline std::string analyze_report(SimplicialGraph const &input,
                                  AnalyzeOptions const &opts = {})
{
  using detail::format_set;
  using detail::yes_no;

  auto graph = share(input);
  auto const &g = *graph;
  std::ostringstream out;

  auto auts = graph_automorphisms(g, opts.max_vertices);
  auto ds = domination_structure(g, auts);

  out << "graph.vertices: " << g.num_vertices() << '\n';
  out << "graph.edges: " << g.num_edges() << '\n';
  out << "graph.automorphisms: " << auts.size() << '\n';
  out << "domination.classes: " << ds.classes.size() << '\n';
  out << "domination.orbits: " << ds.orbits.size() << '\n';

  auto aus = austerity(g, opts.max_vertices);
  out << "austerity.asymmetric: " << yes_no(aus.asymmetric) << '\n';
  out << "austerity.dominated_free: " << yes_no(aus.dominated_free) << '\n';
  out << "austerity.star_cuts_connected: " << yes_no(aus.star_cuts_connected)
      << '\n';
  out << "austerity.verdict: " << to_string(aus.verdict) << '\n';

  auto sil = find_sil(g);
  if (sil)
    out << "sil: " << g.name(sil->v) << ' ' << g.name(sil->w) << ' '
        << format_set(g, sil->component) << '\n';
  else
    out << "sil: none\n";

  std::size_t inversions = 0, symmetries = 0, transvections = 0, pcs = 0;
  for (auto const &gen : enumerate_ls_generators(g, opts.max_vertices)) {
    switch (gen.index()) {
      case 0: ++inversions; break;
      case 1: ++symmetries; break;
      case 2: ++transvections; break;
      default: ++pcs; break;
    }
  }
  out << "ls.inversions: " << inversions << '\n';
  out << "ls.graph_symmetries: " << symmetries << '\n';
  out << "ls.transvections: " << transvections << '\n';
  out << "ls.partial_conjugations: " << pcs << '\n';

  auto counts = star_cut_counts(g);
  out << "star_cuts.K:";
  for (Vertex c = 0; c < g.num_vertices(); ++c)
    out << ' ' << g.name(c) << '=' << counts[c];
  out << '\n';

  auto d = join_decomposition(graph);
  out << "center.social: " << format_set(g, d.social) << '\n';
  out << "center.k: " << d.k << '\n';
  out << "center.delta: " << format_set(g, d.delta_vertices) << '\n';

  if (d.k > 0 && !d.delta_vertices.empty()) {
    auto lattice = lateral_transvections(d);
    auto sc = sign_classes(d);

    out << "lattice.rank: " << lattice.rank() << '\n';
    out << "sign_classes:";
    for (auto const &cls : sc.classes)
      out << ' ' << format_set(*d.delta, cls);
    out << '\n';
    out << "sign_classes.m: " << sc.m << '\n';
    out << "centralizer.order: " << centralizer_order(d) << '\n';
    out << "bound.out_aut.center: " << out_aut_lower_bound_center(graph)
        << '\n';
  } else {
    out << "bound.out_aut.center: n/a ("
        << (d.k == 0 ? "no social vertex" : "delta is empty") << ")\n";
  }

  if (d.k == 0 && aus.verdict != Austerity::neither && !sil) {
    Vertex best = 0;
    for (Vertex c = 0; c < g.num_vertices(); ++c) {
      if (counts[c] > counts[best])
        best = c;
    }
    out << "bound.out_aut.star_cut: " << star_cut_bound(g, opts.max_vertices);
    if (!g.empty())
      out << " (c=" << g.name(best) << ", K_c=" << counts[best] << ")";
    out << '\n';
  } else {
    out << "bound.out_aut.star_cut: n/a ("
        << (d.k != 0 ? "graph has a centre"
            : aus.verdict == Austerity::neither
              ? "not austere with star cuts"
              : "graph has a SIL")
        << ")\n";
  }

  if (aus.verdict == Austerity::austere && !g.empty())
    out << "bound.out_out.austere: "
        << out_out_austere_order(g, opts.max_vertices) << " (|GL("
        << g.num_vertices() << ",2)|)\n";
  else
    out << "bound.out_out.austere: n/a (not austere)\n";

  return out.str();
}

// ---------------------------------------------------------------------------
// Verification harnesses

struct VerifyItem
{
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyResult
{
  std::string which;
  std::vector<VerifyItem> items;

  bool passed() const
  {
    for (auto const &item : items) {
      if (!item.passed)
        return false;
    }
    return true;
  }

  std::string render() const
  {
    std::ostringstream out;
    for (auto const &item : items) {
      out << (item.passed ? "PASS" : "FAIL") << "  " << item.name;
      if (!item.detail.empty())
        out << "  " << item.detail;
      out << '\n';
    }
    out << which << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }
};

inline VerifyItem from_check(std::string name, CheckReport const &r)
{
  std::string detail;
  for (auto const &d : r.details)
    detail += (detail.empty() ? "" : "; ") + d;
  if (r.skipped)
    detail = "skipped" + (detail.empty() ? "" : ": " + detail);
  return {std::move(name), r.passed, detail};
}

/// Number of invertible n×n matrices over Z_2 by exhaustive enumeration.
inline std::uint64_t count_invertible_gf2(unsigned n)
{
  if (n == 0 || n > 4)
    throw precondition_error("exhaustive count supports 1 <= n <= 4");

  std::uint64_t total = 0;
  std::uint64_t cells = std::uint64_t(1) << (n * n);
  for (std::uint64_t bits = 0; bits < cells; ++bits) {
    std::vector<std::uint32_t> rows(n);
    for (unsigned i = 0; i < n; ++i)
      rows[i] = static_cast<std::uint32_t>((bits >> (i * n)) &
                                           ((1u << n) - 1));

    unsigned rank = 0;
    for (unsigned col = 0; col < n; ++col) {
      unsigned pivot = rank;
      while (pivot < n && !((rows[pivot] >> col) & 1u))
        ++pivot;
      if (pivot == n)
        continue;
      std::swap(rows[pivot], rows[rank]);
      for (unsigned r = 0; r < n; ++r) {
        if (r != rank && ((rows[r] >> col) & 1u))
          rows[r] ^= rows[rank];
      }
      ++rank;
    }
    total += rank == n;
  }
  return total;
}

/// Small Δ graphs used for the sign-class equivalence.
inline std::vector<std::pair<std::string, SimplicialGraph>> delta_corpus()
{
  return {
    {"K2+K3", disjoint_union({complete_graph({"a1", "a2"}),
                              complete_graph({"b1", "b2", "b3"})})},
    {"K2+K2", disjoint_union({complete_graph({"a1", "a2"}),
                              complete_graph({"b1", "b2"})})},
    {"P3", path_graph({"a", "b", "c"})},
    {"K3+pendant", make_graph({"a", "b", "c", "d"},
                              {{"a", "b"}, {"b", "c"}, {"a", "c"},
                               {"a", "d"}})},
    {"P4", path_graph({"a", "b", "c", "d"})},
    {"C5", cycle_graph({"a", "b", "c", "d", "e"})},
    {"K1", complete_graph({"a"})},
  };
}

struct SignEquivalenceResult
{
  std::size_t assignments = 0;
  std::size_t centralizing = 0;
  std::size_t disagreements = 0;
};

/// Enumerates every sign assignment that is constant on domination classes
/// and compares the matrix commutation test with constancy on sign classes.
inline SignEquivalenceResult sign_equivalence(SimplicialGraph const &delta)
{
  auto ref = share(delta);
  auto gens = abelianized_generators(ref);
  auto ds = domination_structure(delta);
  auto sc = sign_classes(delta);

  SignEquivalenceResult res;
  std::size_t nc = ds.classes.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << nc); ++bits) {
    std::vector<int> class_signs(nc);
    for (std::size_t i = 0; i < nc; ++i)
      class_signs[i] = (bits >> i) & 1u ? -1 : 1;
    auto signs = signs_from_blocks(ds.classes, class_signs);

    bool by_matrix = diagonal_centralizes(gens, signs);
    bool by_classes = constant_on_classes(sc, signs);
    ++res.assignments;
    res.centralizing += by_matrix;
    res.disagreements += by_matrix != by_classes;
  }
  return res;
}

inline VerifyResult verify_table()
{
  VerifyResult res{"table", {}};
  for (auto const &row : verify_conjugation_table()) {
    res.items.push_back({"conj " + row.generator,
                         row.passed,
                         "expected " + row.expected + "; computed " +
                           row.computed});
  }
  return res;
}

inline VerifyResult verify_prop_3_1()
{
  VerifyResult res{"prop-3-1", {}};
  auto graph = share(join_complete(2, {2, 3}));
  auto d = join_decomposition(graph);
  auto const &g = *graph;

  res.items.push_back(from_check("lateral lattice on join(K2, K2+K3)",
                                 verify_lateral_lattice(d)));

  auto s = g.index_of("s1"), t = g.index_of("s2"), a = g.index_of("x1_1");
  auto tau_sa = ls_to_automorphism(graph, Transvection{s, a});
  auto tau_ta = ls_to_automorphism(graph, Transvection{t, a});
  auto tau_ts = ls_to_automorphism(graph, Transvection{t, s});

  res.items.push_back({"tau_ta tau_sa tau_ta^-1 = tau_sa",
                       automorphisms_equal(
                         conjugate_automorphism(tau_ta, tau_sa), tau_sa),
                       ""});

  auto image = raag::apply(compose(tau_ts, tau_sa), letter_word(a));
  Word expected{{a, 1}, {s, 1}, {t, 1}};
  res.items.push_back({"(tau_ts o tau_sa)(a) = a s t",
                       words_equal(g, image, expected),
                       "computed " + format_word(g, image)});

  auto lattice = lateral_transvections(d);
  res.items.push_back({"rank k|Delta| = 10", lattice.rank() == 10,
                       "rank " + std::to_string(lattice.rank())});
  return res;
}

inline VerifyResult verify_prop_3_4(std::uint64_t seed = 0)
{
  VerifyResult res{"prop-3-4", {}};
  std::mt19937_64 rng(seed);

  for (auto const &[name, delta] : delta_corpus()) {
    auto eq = sign_equivalence(delta);
    auto sc = sign_classes(delta);
    bool count_ok = eq.centralizing == (std::size_t(1) << sc.m);
    res.items.push_back({"centralizer <=> constant on sign classes, " + name,
                         eq.disagreements == 0 && count_ok,
                         std::to_string(eq.assignments) + " assignments, " +
                           std::to_string(eq.centralizing) +
                           " centralizing, m=" + std::to_string(sc.m)});

    std::vector<std::size_t> priority(delta.num_vertices());
    std::iota(priority.begin(), priority.end(), 0);
    std::shuffle(priority.begin(), priority.end(), rng);
    res.items.push_back({"sign classes independent of order, " + name,
                         sign_classes(delta, priority) == sc, ""});
  }
  return res;
}

inline VerifyResult verify_split()
{
  VerifyResult res{"split", {}};

  auto check = [&](std::string const &name, SimplicialGraph g) {
    auto d = join_decomposition(share(std::move(g)));
    res.items.push_back(from_check("normality, " + name,
                                   verify_split_normality(d)));
    res.items.push_back(from_check("iota inverts lateral, " + name,
                                   iota_noncentrality_check(d)));
  };

  check("join(K2, K2+K3)", join_complete(2, {2, 3}));
  // Δ = path a-b-c with a pendant d attached to c.
  check("join(K1, P3+pendant)",
        join({complete_graph({"s"}), path_graph({"a", "b", "c", "d"})}));
  return res;
}

inline VerifyResult verify_theorem_a_center()
{
  VerifyResult res{"theorem-a-center", {}};

  struct Case
  {
    std::size_t k;
    std::vector<std::size_t> sizes;
    BigInt expected;
  };
  std::vector<Case> cases{{1, {2, 3}, 2}, {2, {2, 3}, 2}, {1, {2, 3, 4}, 4}};

  for (auto const &c : cases) {
    auto graph = share(join_complete(c.k, c.sizes));
    auto d = join_decomposition(graph);
    auto sc = sign_classes(d);
    auto bound = out_aut_lower_bound_center(graph);
    auto eq = sign_equivalence(*d.delta);

    // Distinct outer classes: centralizing sign vectors modulo ±.
    auto ds = domination_structure(*d.delta);
    std::vector<std::vector<int>> centralizing;
    auto gens = abelianized_generators(d.delta);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << ds.classes.size());
         ++bits) {
      std::vector<int> cs(ds.classes.size());
      for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = (bits >> i) & 1u ? -1 : 1;
      auto signs = signs_from_blocks(ds.classes, cs);
      if (diagonal_centralizes(gens, signs))
        centralizing.push_back(signs);
    }
    std::size_t outer = 0;
    for (std::size_t i = 0; i < centralizing.size(); ++i) {
      bool fresh = true;
      for (std::size_t j = 0; j < i && fresh; ++j)
        fresh = !sign_automorphisms_differ_by_inner(centralizing[i],
                                                    centralizing[j]);
      outer += fresh;
    }

    std::ostringstream name;
    name << "join_complete(" << c.k << ", [";
    for (std::size_t i = 0; i < c.sizes.size(); ++i)
      name << (i ? "," : "") << c.sizes[i];
    name << "])";

    std::ostringstream detail;
    detail << "m=" << sc.m << " d=" << c.sizes.size() << " bound=" << bound
           << " centralizing=" << eq.centralizing << " outer=" << outer;

    bool ok = sc.m == c.sizes.size() && bound == c.expected &&
              eq.disagreements == 0 &&
              eq.centralizing == (std::size_t(1) << sc.m) &&
              BigInt(outer) == bound;
    res.items.push_back({name.str(), ok, detail.str()});
  }
  return res;
}

inline VerifyResult verify_theorem_a_centreless()
{
  VerifyResult res{"theorem-a-centreless", {}};

  struct Case
  {
    std::vector<std::size_t> spokes;
    BigInt expected;
  };
  std::vector<Case> cases{{{3, 7, 12}, 4},
                          {{3, 7, 12, 18}, 8},
                          {{3, 7, 12, 18, 25}, 16}};

  for (auto const &c : cases) {
    SpokeSet spokes{c.spokes};
    auto g = cycle_hub(spokes);
    auto aus = austerity(g);
    auto sil = find_sil(g);
    auto hub_k = star_cut_components(g, g.index_of("c")).size();
    auto bound = star_cut_bound(g);

    std::string name = "Gamma_E, E={";
    for (std::size_t i = 0; i < c.spokes.size(); ++i)
      name += (i ? "," : "") + std::to_string(c.spokes[i]);
    name += "}";

    std::ostringstream detail;
    detail << to_string(aus.verdict) << ", sil=" << (sil ? "yes" : "none")
           << ", K_c=" << hub_k << ", bound=" << bound;

    bool ok = aus.verdict == Austerity::austere_with_star_cuts && !sil &&
              hub_k == spokes.t() && bound == c.expected;
    res.items.push_back({name, ok, detail.str()});
  }

  auto graph = share(cycle_hub(SpokeSet{{3, 7, 12}}));
  EtaChecker eta(graph);
  res.items.push_back({"iota_v gamma iota_v^-1 = gamma^(+-1), Gamma_{3,7,12}",
                       eta.inversions_act_by_signs(), ""});

  for (Vertex c = 0; c < graph->num_vertices(); ++c) {
    for (std::size_t j = 1; j <= eta.count(c); ++j) {
      auto r = eta.check(c, j);
      res.items.push_back(from_check(r.name + ", Gamma_{3,7,12}", r));
    }
  }
  return res;
}

inline VerifyResult verify_theorem_b()
{
  VerifyResult res{"theorem-b", {}};

  for (unsigned n = 1; n <= 3; ++n) {
    auto brute = count_invertible_gf2(n);
    auto formula = gl_order(n, 2);
    res.items.push_back({"gl_order(" + std::to_string(n) + ",2)",
                         BigInt(brute) == formula,
                         "formula " + formula.str() + ", exhaustive " +
                           std::to_string(brute)});
  }

  auto graph = share(frucht());
  auto const &g = *graph;
  auto aus = austerity(g);

  std::size_t connected_cuts = 0;
  for (auto k : star_cut_counts(g))
    connected_cuts += k == 1;

  res.items.push_back({"Frucht asymmetric", aus.asymmetric, ""});
  res.items.push_back({"Frucht has no dominated vertex", aus.dominated_free,
                       ""});
  res.items.push_back({"Frucht star cuts connected", connected_cuts == 12,
                       std::to_string(connected_cuts) + " of 12"});
  res.items.push_back({"Frucht austere", aus.verdict == Austerity::austere,
                       ""});

  bool only_inv_pc = true, pcs_trivial = true;
  for (auto const &gen : enumerate_ls_generators(g)) {
    if (std::holds_alternative<GraphSymmetry>(gen) ||
        std::holds_alternative<Transvection>(gen))
      only_inv_pc = false;
    if (std::holds_alternative<PartialConjugation>(gen) &&
        not_inner_by_abelianization(ls_to_automorphism(graph, gen)))
      pcs_trivial = false;
  }
  res.items.push_back({"LS generators are inversions and partial "
                       "conjugations", only_inv_pc, ""});
  res.items.push_back({"partial conjugations abelianize trivially",
                       pcs_trivial, ""});

  auto order = out_out_austere_order(g);
  res.items.push_back({"|Out(Out(A_Gamma))| = |GL(12,2)|",
                       order == gl_order(12, 2), order.str()});
  return res;
}

inline std::vector<std::string> verify_targets()
{
  return {"table", "prop-3-1", "prop-3-4", "split", "theorem-a-center",
          "theorem-a-centreless", "theorem-b"};
}

inline VerifyResult run_verify(std::string const &which,
                               std::uint64_t seed = 0)
{
  if (which == "table")
    return verify_table();
  if (which == "prop-3-1")
    return verify_prop_3_1();
  if (which == "prop-3-4")
    return verify_prop_3_4(seed);
  if (which == "split")
    return verify_split();
  if (which == "theorem-a-center")
    return verify_theorem_a_center();
  if (which == "theorem-a-centreless")
    return verify_theorem_a_centreless();
  if (which == "theorem-b")
    return verify_theorem_b();
  throw precondition_error("unknown verification target '" + which + "'");
}

} // namespace raag

#endif // RAAG_REPORT_HPP
