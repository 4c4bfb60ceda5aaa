#ifndef RAAG_AUTOMORPHISM_HPP
#define RAAG_AUTOMORPHISM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "words.hpp"

namespace raag
{

using GraphRef = std::shared_ptr<SimplicialGraph const>;

inline GraphRef share(SimplicialGraph g)
{ return std::make_shared<SimplicialGraph const>(std::move(g)); }

// ---------------------------------------------------------------------------
// LS generators

struct Inversion
{
  Vertex vertex;
  bool operator==(Inversion const &) const = default;
};

struct GraphSymmetry
{
  GraphPermutation permutation;
  bool operator==(GraphSymmetry const &) const = default;
};

/// τ_{multiplier,target}: target ↦ target · multiplier. Requires
/// target ≤ multiplier.
struct Transvection
{
  Vertex multiplier;
  Vertex target;
  bool operator==(Transvection const &) const = default;
};

/// γ_{c,D}: d ↦ c d c^-1 for every d in the component D of Γ \ st(c).
struct PartialConjugation
{
  Vertex conjugator;
  VertexSet component;
  bool operator==(PartialConjugation const &) const = default;
};

using LSGenerator =
  std::variant<Inversion, GraphSymmetry, Transvection, PartialConjugation>;

inline std::string describe(SimplicialGraph const &g, LSGenerator const &gen)
{
  return std::visit([&](auto const &x) -> std::string {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Inversion>) {
      return "iota_" + g.name(x.vertex);
    } else if constexpr (std::is_same_v<T, GraphSymmetry>) {
      std::string res = "phi(";
      bool first = true;
      for (Vertex v = 0; v < x.permutation.degree(); ++v) {
        if (x.permutation(v) == v)
          continue;
        res += (first ? "" : " ") + g.name(v) + "->" +
               g.name(x.permutation(v));
        first = false;
      }
      return res + ")";
    } else if constexpr (std::is_same_v<T, Transvection>) {
      return "tau_" + g.name(x.multiplier) + "," + g.name(x.target);
    } else {
      std::string res = "gamma_" + g.name(x.conjugator) + ",{";
      for (std::size_t i = 0; i < x.component.size(); ++i)
        res += (i ? " " : "") + g.name(x.component[i]);
      return res + "}";
    }
  }, gen);
}

inline std::vector<PartialConjugation>
partial_conjugations(SimplicialGraph const &g)
{
  std::vector<PartialConjugation> res;
  for (Vertex c = 0; c < g.num_vertices(); ++c) {
    for (auto &comp : star_cut_components(g, c))
      res.push_back(PartialConjugation{c, std::move(comp)});
  }
  return res;
}

/// Inversions, non-identity graph symmetries, dominated transvections and
/// partial conjugations, in that order.
inline std::vector<LSGenerator>
enumerate_ls_generators(SimplicialGraph const &g,
                        std::size_t max_vertices = default_max_vertices)
{
  std::vector<LSGenerator> res;

  for (Vertex v = 0; v < g.num_vertices(); ++v)
    res.emplace_back(Inversion{v});

  for (auto &phi : graph_automorphisms(g, max_vertices)) {
    if (!phi.is_identity())
      res.emplace_back(GraphSymmetry{std::move(phi)});
  }

  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
      if (x != y && dominates(g, x, y))
        res.emplace_back(Transvection{x, y});
    }
  }

  for (auto &pc : partial_conjugations(g))
    res.emplace_back(std::move(pc));

  return res;
}

// ---------------------------------------------------------------------------
// Automorphisms

/// Automorphism of A_Γ given by the images of the generators, together with
/// the images under its inverse. Images are kept in normal form.
class RaagAutomorphism
{
public:
  RaagAutomorphism(GraphRef graph,
                   std::vector<Word> forward,
                   std::vector<Word> backward)
  : _graph(std::move(graph)),
    _forward(std::move(forward)),
    _backward(std::move(backward))
  {
    if (!_graph)
      throw precondition_error("automorphism without a graph");

    std::size_t n = _graph->num_vertices();
    if (_forward.size() != n || _backward.size() != n)
      throw precondition_error("automorphism must map every generator");

    for (auto &w : _forward)
      w = normal_form(*_graph, w).word();
    for (auto &w : _backward)
      w = normal_form(*_graph, w).word();
  }

  static RaagAutomorphism identity(GraphRef graph)
  {
    std::vector<Word> images;
    for (Vertex v = 0; v < graph->num_vertices(); ++v)
      images.push_back(letter_word(v));
    return RaagAutomorphism(std::move(graph), images, images);
  }

  GraphRef const &graph_ref() const { return _graph; }
  SimplicialGraph const &graph() const { return *_graph; }

  Word const &forward(Vertex v) const { return _forward.at(v); }
  Word const &backward(Vertex v) const { return _backward.at(v); }

  std::vector<Word> const &forward_images() const { return _forward; }
  std::vector<Word> const &backward_images() const { return _backward; }

private:
  GraphRef _graph;
  std::vector<Word> _forward;
  std::vector<Word> _backward;
};

namespace detail
{

inline Word substitute(SimplicialGraph const &g,
                       std::vector<Word> const &images,
                       Word const &w)
{
  Word res;
  for (auto const &l : w) {
    auto const &img = images.at(l.vertex);
    if (l.sign > 0)
      res.insert(res.end(), img.begin(), img.end());
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        res.push_back(it->inverse());
  }
  return normal_form(g, res).word();
}

inline void check_same_graph(RaagAutomorphism const &f,
                             RaagAutomorphism const &h)
{
  if (f.graph_ref() != h.graph_ref() && f.graph() != h.graph())
    throw precondition_error("automorphisms of different groups");
}

} // namespace detail

inline Word apply(RaagAutomorphism const &f, Word const &w)
{ return detail::substitute(f.graph(), f.forward_images(), w); }

/// f ∘ h (h is applied first).
inline RaagAutomorphism compose(RaagAutomorphism const &f,
                                RaagAutomorphism const &h)
{
  detail::check_same_graph(f, h);
  auto const &g = f.graph();

  std::vector<Word> fwd, bwd;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    fwd.push_back(detail::substitute(g, f.forward_images(), h.forward(v)));
    bwd.push_back(detail::substitute(g, h.backward_images(), f.backward(v)));
  }
  return RaagAutomorphism(f.graph_ref(), std::move(fwd), std::move(bwd));
}

inline RaagAutomorphism invert(RaagAutomorphism const &f)
{
  return RaagAutomorphism(f.graph_ref(), f.backward_images(),
                          f.forward_images());
}

inline RaagAutomorphism power(RaagAutomorphism const &f, int exponent)
{
  auto base = exponent < 0 ? invert(f) : f;
  auto res = RaagAutomorphism::identity(f.graph_ref());
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
    res = compose(res, base);
  return res;
}

inline bool automorphisms_equal(RaagAutomorphism const &f,
                                RaagAutomorphism const &h)
{
  detail::check_same_graph(f, h);
  for (Vertex v = 0; v < f.graph().num_vertices(); ++v) {
    if (!words_equal(f.graph(), f.forward(v), h.forward(v)))
      return false;
  }
  return true;
}

inline bool is_identity(RaagAutomorphism const &f)
{ return automorphisms_equal(f, RaagAutomorphism::identity(f.graph_ref())); }

/// λ ∘ f ∘ λ^-1.
inline RaagAutomorphism conjugate_automorphism(RaagAutomorphism const &lambda,
                                               RaagAutomorphism const &f)
{ return compose(lambda, compose(f, invert(lambda))); }

inline bool automorphisms_commute(RaagAutomorphism const &f,
                                  RaagAutomorphism const &h)
{ return automorphisms_equal(compose(f, h), compose(h, f)); }

/// Checks that the images of adjacent generators commute (under both maps)
/// and that the two maps are mutually inverse on the generators.
inline CheckReport verify_automorphism(RaagAutomorphism const &f)
{
  CheckReport report;
  report.name = "automorphism";

  auto const &g = f.graph();
  for (auto [u, w] : g.edges()) {
    if (!normal_form(g, commutator(f.forward(u), f.forward(w))).is_identity())
      report.fail("images of " + g.name(u) + " and " + g.name(w) +
                  " do not commute");
    if (!normal_form(g, commutator(f.backward(u), f.backward(w)))
           .is_identity())
      report.fail("inverse images of " + g.name(u) + " and " + g.name(w) +
                  " do not commute");
  }

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (detail::substitute(g, f.backward_images(), f.forward(v)) !=
        letter_word(v))
      report.fail("backward after forward moves " + g.name(v));
    if (detail::substitute(g, f.forward_images(), f.backward(v)) !=
        letter_word(v))
      report.fail("forward after backward moves " + g.name(v));
  }

  return report;
}

inline RaagAutomorphism ls_to_automorphism(GraphRef const &graph,
                                           LSGenerator const &gen)
{
  auto const &g = *graph;
  std::size_t n = g.num_vertices();

  std::vector<Word> fwd, bwd;
  for (Vertex v = 0; v < n; ++v) {
    fwd.push_back(letter_word(v));
    bwd.push_back(letter_word(v));
  }

  std::visit([&](auto const &x) {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Inversion>) {
      g.check_vertex(x.vertex);
      fwd[x.vertex] = bwd[x.vertex] = letter_word(x.vertex, -1);

    } else if constexpr (std::is_same_v<T, GraphSymmetry>) {
      if (!is_graph_automorphism(g, x.permutation))
        throw precondition_error("not a graph automorphism");
      auto inv = x.permutation.inverse();
      for (Vertex v = 0; v < n; ++v) {
        fwd[v] = letter_word(x.permutation(v));
        bwd[v] = letter_word(inv(v));
      }

    } else if constexpr (std::is_same_v<T, Transvection>) {
      g.check_vertex(x.multiplier);
      g.check_vertex(x.target);
      if (x.multiplier == x.target || !dominates(g, x.multiplier, x.target))
        throw precondition_error(g.name(x.target) + " is not dominated by " +
                                 g.name(x.multiplier));
      fwd[x.target] = Word{{x.target, 1}, {x.multiplier, 1}};
      bwd[x.target] = Word{{x.target, 1}, {x.multiplier, -1}};

    } else {
      g.check_vertex(x.conjugator);
      auto comps = star_cut_components(g, x.conjugator);
      if (std::find(comps.begin(), comps.end(), x.component) == comps.end())
        throw precondition_error("not a component of the star cut at " +
                                 g.name(x.conjugator));
      Vertex c = x.conjugator;
      for (Vertex d : x.component) {
        fwd[d] = Word{{c, 1}, {d, 1}, {c, -1}};
        bwd[d] = Word{{c, -1}, {d, 1}, {c, 1}};
      }
    }
  }, gen);

  return RaagAutomorphism(graph, std::move(fwd), std::move(bwd));
}

// ---------------------------------------------------------------------------
// Abelianization

/// Integer matrix whose column v is the exponent-sum vector of f(v).
inline IntMatrix abelianization_matrix(RaagAutomorphism const &f)
{
  std::size_t n = f.graph().num_vertices();
  IntMatrix m(n, n);
  for (Vertex v = 0; v < n; ++v) {
    auto col = abelianize(f.graph(), f.forward(v));
    for (Vertex u = 0; u < n; ++u)
      m(u, v) = col[u];
  }
  return m;
}

/// Witness that an automorphism is not inner: its action on the
/// abelianization is not the identity.
struct NotInnerCertificate
{
  IntMatrix matrix;
  Vertex column;
};

inline std::optional<NotInnerCertificate>
not_inner_by_abelianization(RaagAutomorphism const &f)
{
  auto m = abelianization_matrix(f);
  for (Vertex v = 0; v < m.cols(); ++v) {
    for (Vertex u = 0; u < m.rows(); ++u) {
      if (m(u, v) != (u == v ? 1 : 0))
        return NotInnerCertificate{std::move(m), v};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Conjugation of lateral transvections

/// Images of the generators that f moves, e.g. "a->a s t, b->b s^-1".
inline std::string describe_action(RaagAutomorphism const &f)
{
  auto const &g = f.graph();
  std::string res;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (f.forward(v) == letter_word(v))
      continue;
    if (!res.empty())
      res += ", ";
    res += g.name(v) + "->" + format_word(g, f.forward(v));
  }
  return res.empty() ? "id" : res;
}

struct TableRow
{
  std::string generator;
  std::string expected;
  std::string computed;
  bool passed = false;
};

namespace detail
{

struct LateralTerm
{
  int exponent;
  char social;
  char vertex;
};

inline RaagAutomorphism lateral_product(GraphRef const &graph,
                                        std::vector<LateralTerm> const &terms)
{
  auto const &g = *graph;
  auto res = RaagAutomorphism::identity(graph);
  for (auto const &t : terms) {
    auto tau = ls_to_automorphism(
      graph, Transvection{g.index_of(std::string(1, t.social)),
                          g.index_of(std::string(1, t.vertex))});
    res = compose(res, power(tau, t.exponent));
  }
  return res;
}

} // namespace detail

/// Conjugates τ_{s,a} by each generator type from the lateral-transvection
/// conjugation table and compares with the stated product of lateral
/// transvections.
///
/// Witness graphs: join(K3{r,s,t}, K3{a,b,d}) for every row except the
/// partial conjugation row, which uses join(K3{r,s,t}, path a-x-b-y) with
/// both γ_{x,{y}} (a outside D) and γ_{b,{a}} (a inside D).
inline std::vector<TableRow> verify_conjugation_table()
{
  auto clique = share(join({complete_graph({"r", "s", "t"}),
                            complete_graph({"a", "b", "d"})}));
  auto pathy = share(join({complete_graph({"r", "s", "t"}),
                           path_graph({"a", "x", "b", "y"})}));

  auto vtx = [](GraphRef const &graph, char name) {
    return graph->index_of(std::string(1, name));
  };

  auto inversion = [&](GraphRef const &graph, char v) {
    return ls_to_automorphism(graph, Inversion{vtx(graph, v)});
  };
  auto transvection = [&](GraphRef const &graph, char x, char y) {
    return ls_to_automorphism(graph, Transvection{vtx(graph, x),
                                                  vtx(graph, y)});
  };

  std::vector<TableRow> rows;

  auto check = [&](std::string generator, std::string expected,
                   GraphRef const &graph, RaagAutomorphism const &lambda,
                   std::vector<detail::LateralTerm> const &terms) {
    auto tau_sa = transvection(graph, 's', 'a');
    auto lhs = conjugate_automorphism(lambda, tau_sa);
    auto rhs = detail::lateral_product(graph, terms);
    rows.push_back(TableRow{std::move(generator), std::move(expected),
                            describe_action(lhs),
                            automorphisms_equal(lhs, rhs)});
  };

  check("iota_t", "tau_sa", clique, inversion(clique, 't'),
        {{1, 's', 'a'}});
  check("iota_s", "-tau_sa", clique, inversion(clique, 's'),
        {{-1, 's', 'a'}});
  check("tau_st", "tau_sa", clique, transvection(clique, 's', 't'),
        {{1, 's', 'a'}});
  check("tau_rt", "tau_sa", clique, transvection(clique, 'r', 't'),
        {{1, 's', 'a'}});
  check("tau_ts", "tau_sa + tau_ta", clique, transvection(clique, 't', 's'),
        {{1, 's', 'a'}, {1, 't', 'a'}});
  check("tau_ts^-1", "tau_sa - tau_ta", clique,
        invert(transvection(clique, 't', 's')),
        {{1, 's', 'a'}, {-1, 't', 'a'}});
  check("iota_b", "tau_sa", clique, inversion(clique, 'b'),
        {{1, 's', 'a'}});
  check("iota_a", "-tau_sa", clique, inversion(clique, 'a'),
        {{-1, 's', 'a'}});
  check("tau_bd", "tau_sa", clique, transvection(clique, 'b', 'd'),
        {{1, 's', 'a'}});
  check("tau_ab", "tau_sa - tau_sb", clique, transvection(clique, 'a', 'b'),
        {{1, 's', 'a'}, {-1, 's', 'b'}});
  check("tau_ab^-1", "tau_sa + tau_sb", clique,
        invert(transvection(clique, 'a', 'b')),
        {{1, 's', 'a'}, {1, 's', 'b'}});

  // φ cycles a -> b -> d -> a and fixes S, so τ_{s,φ(a)} = τ_{s,b}.
  {
    auto phi = GraphPermutation::identity(clique->num_vertices());
    phi.mapping[vtx(clique, 'a')] = vtx(clique, 'b');
    phi.mapping[vtx(clique, 'b')] = vtx(clique, 'd');
    phi.mapping[vtx(clique, 'd')] = vtx(clique, 'a');
    check("phi=(a b d)", "tau_s,phi(a)", clique,
          ls_to_automorphism(clique, GraphSymmetry{phi}), {{1, 's', 'b'}});
  }

  {
    auto gamma_outside = ls_to_automorphism(
      pathy, PartialConjugation{vtx(pathy, 'x'), {vtx(pathy, 'y')}});
    auto gamma_inside = ls_to_automorphism(
      pathy, PartialConjugation{vtx(pathy, 'b'), {vtx(pathy, 'a')}});

    auto tau_sa = transvection(pathy, 's', 'a');
    auto lhs_out = conjugate_automorphism(gamma_outside, tau_sa);
    auto lhs_in = conjugate_automorphism(gamma_inside, tau_sa);

    rows.push_back(TableRow{
      "gamma_c,D", "tau_sa",
      "[c=x,D={y}] " + describe_action(lhs_out) + "; [c=b,D={a}] " +
        describe_action(lhs_in),
      automorphisms_equal(lhs_out, tau_sa) &&
        automorphisms_equal(lhs_in, tau_sa)});
  }

  return rows;
}

} // namespace raag

#endif // RAAG_AUTOMORPHISM_HPP
