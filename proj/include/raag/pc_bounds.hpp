#ifndef RAAG_PC_BOUNDS_HPP
#define RAAG_PC_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matrix.hpp"

namespace raag
{

enum class Austerity
{
  austere,
  austere_with_star_cuts,
  neither
};

inline std::string to_string(Austerity a)
{
  switch (a) {
    case Austerity::austere:
      return "austere";
    case Austerity::austere_with_star_cuts:
      return "austere_with_star_cuts";
    default:
      return "neither";
  }
}

struct AusterityReport
{
  bool asymmetric = false;
  bool dominated_free = false;
  bool star_cuts_connected = false;
  Austerity verdict = Austerity::neither;
};

/// Number of components of Γ \ st(c) for every c.
inline std::vector<std::size_t> star_cut_counts(SimplicialGraph const &g)
{
  std::vector<std::size_t> res;
  for (Vertex c = 0; c < g.num_vertices(); ++c)
    res.push_back(star_cut_components(g, c).size());
  return res;
}

// An empty star cut counts as connected.
inline AusterityReport austerity(SimplicialGraph const &g,
                                 std::size_t max_vertices = default_max_vertices)
{
  AusterityReport r;
  r.asymmetric = is_asymmetric(g, max_vertices);
  r.dominated_free = !has_dominated_vertex(g);

  r.star_cuts_connected = true;
  for (auto count : star_cut_counts(g)) {
    if (count > 1)
      r.star_cuts_connected = false;
  }

  if (r.asymmetric && r.dominated_free)
    r.verdict = r.star_cuts_connected ? Austerity::austere
                                      : Austerity::austere_with_star_cuts;
  return r;
}

// ---------------------------------------------------------------------------
// Separating intersections of links

/// Non-adjacent v, w and a component of Γ \ (lk(v) ∩ lk(w)) containing
/// neither of them.
struct SilWitness
{
  Vertex v;
  Vertex w;
  VertexSet component;
};

inline std::optional<SilWitness> find_sil_for_pair(SimplicialGraph const &g,
                                                   Vertex v, Vertex w)
{
  if (v == w || g.adjacent(v, w))
    throw precondition_error("SIL pairs must be distinct and non-adjacent");

  auto cut = set_intersection(link(g, v), link(g, w));
  for (auto &comp : components_within(g, set_difference(all_vertices(g), cut))) {
    if (!std::binary_search(comp.begin(), comp.end(), v) &&
        !std::binary_search(comp.begin(), comp.end(), w))
      return SilWitness{v, w, std::move(comp)};
  }
  return std::nullopt;
}

inline std::optional<SilWitness> find_sil(SimplicialGraph const &g)
{
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w = v + 1; w < g.num_vertices(); ++w) {
      if (g.adjacent(v, w))
        continue;
      if (auto witness = find_sil_for_pair(g, v, w))
        return witness;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Partial conjugation subgroup

/// Commutation graph of the partial conjugations: one vertex per partial
/// conjugation, named g_<c>_<j> for the j-th component cut off by c, and an
/// edge whenever the two automorphisms commute.
struct PcGraph
{
  SimplicialGraph graph;
  std::vector<PartialConjugation> generators;
};

inline PcGraph pc_defining_graph(GraphRef const &graph)
{
  auto const &g = *graph;
  if (auto sil = find_sil(g))
    throw precondition_error("graph has a SIL at " + g.name(sil->v) + ", " +
                             g.name(sil->w));

  PcGraph res;
  res.generators = partial_conjugations(g);

  std::vector<std::string> names;
  std::vector<std::size_t> per_conjugator(g.num_vertices(), 0);
  for (auto const &pc : res.generators) {
    names.push_back("g_" + g.name(pc.conjugator) + "_" +
                    std::to_string(++per_conjugator[pc.conjugator]));
  }

  std::vector<RaagAutomorphism> auts;
  for (auto const &pc : res.generators)
    auts.push_back(ls_to_automorphism(graph, pc));

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    for (std::size_t j = i + 1; j < auts.size(); ++j) {
      if (automorphisms_commute(auts[i], auts[j]))
        edges.emplace_back(i, j);
    }
  }

  res.graph = SimplicialGraph(std::move(names), edges);
  return res;
}

// ---------------------------------------------------------------------------
// Bounds

/// max_c 2^(K_c - 1) with K_c the number of components of Γ \ st(c); a lower
/// bound on |Out(Aut(A_Γ))| for austere-with-star-cuts graphs without SILs.
inline BigInt star_cut_bound(SimplicialGraph const &g,
                             std::size_t max_vertices = default_max_vertices)
{
  if (austerity(g, max_vertices).verdict == Austerity::neither)
    throw precondition_error("graph is not austere with star cuts");
  if (find_sil(g))
    throw precondition_error("graph has a SIL");

  BigInt best = 1;
  for (auto count : star_cut_counts(g)) {
    if (count > 0) {
      BigInt candidate = BigInt(1) << (count - 1);
      if (candidate > best)
        best = candidate;
    }
  }
  return best;
}

inline bool is_prime(unsigned long long q)
{
  if (q < 2)
    return false;
  for (unsigned long long d = 2; d * d <= q; ++d) {
    if (q % d == 0)
      return false;
  }
  return true;
}

/// |GL(n, F_q)| = ∏_{i<n} (q^n - q^i).
inline BigInt gl_order(unsigned long long n, unsigned long long q)
{
  if (n == 0)
    throw precondition_error("matrix size must be positive");
  if (!is_prime(q))
    throw precondition_error("field order must be prime");

  BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
  BigInt qi = 1;
  BigInt res = 1;
  for (unsigned long long i = 0; i < n; ++i) {
    res *= qn - qi;
    qi *= q;
  }
  return res;
}

/// |Out(Out(A_Γ))| = |GL(n, Z_2)| for austere Γ on n vertices.
inline BigInt out_out_austere_order(SimplicialGraph const &g,
                                    std::size_t max_vertices =
                                      default_max_vertices)
{
  if (austerity(g, max_vertices).verdict != Austerity::austere)
    throw precondition_error("graph is not austere");
  return gl_order(g.num_vertices(), 2);
}

// ---------------------------------------------------------------------------
// The η automorphisms

/// Precomputes the inversions, partial conjugations and the conjugation
/// action of the former on the latter, so that every η_{c,j} can be checked
/// against the same relation set.
class EtaChecker
{
public:
  explicit EtaChecker(GraphRef graph)
  : _graph(std::move(graph)),
    _pcs(partial_conjugations(*_graph))
  {
    auto const &g = *_graph;

    for (auto const &pc : _pcs)
      _pc_auts.push_back(ls_to_automorphism(_graph, pc));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      _inversions.push_back(ls_to_automorphism(_graph, Inversion{v}));

    // ι_v γ ι_v^-1 = γ^e with e = ±1.
    _action.assign(_inversions.size(), std::vector<int>(_pcs.size(), 0));
    for (std::size_t v = 0; v < _inversions.size(); ++v) {
      for (std::size_t i = 0; i < _pcs.size(); ++i) {
        auto conj = conjugate_automorphism(_inversions[v], _pc_auts[i]);
        if (automorphisms_equal(conj, _pc_auts[i]))
          _action[v][i] = 1;
        else if (automorphisms_equal(conj, invert(_pc_auts[i])))
          _action[v][i] = -1;
      }
    }

    for (std::size_t i = 0; i < _pcs.size(); ++i) {
      for (std::size_t j = i + 1; j < _pcs.size(); ++j) {
        if (automorphisms_commute(_pc_auts[i], _pc_auts[j]))
          _commuting.emplace_back(i, j);
      }
    }
  }

  std::vector<PartialConjugation> const &partial_conjugations_list() const
  { return _pcs; }

  /// Number of partial conjugations by c.
  std::size_t count(Vertex c) const
  {
    std::size_t k = 0;
    for (auto const &pc : _pcs)
      k += pc.conjugator == c;
    return k;
  }

  /// η_{c,j} inverts the j-th (1-based) partial conjugation by c and fixes
  /// the other partial conjugations and every inversion.
  CheckReport check(Vertex c, std::size_t j) const
  {
    auto const &g = *_graph;
    g.check_vertex(c);

    std::size_t target = _pcs.size(), seen = 0;
    for (std::size_t i = 0; i < _pcs.size(); ++i) {
      if (_pcs[i].conjugator == c && ++seen == j)
        target = i;
    }
    if (seen == 0)
      throw precondition_error("no star cut at " + g.name(c));
    if (target == _pcs.size())
      throw precondition_error("star cut at " + g.name(c) + " has only " +
                               std::to_string(seen) + " components");

    CheckReport report;
    report.name = "eta_" + g.name(c) + "," + std::to_string(j);

    std::vector<int> eta(_pcs.size(), 1);
    eta[target] = -1;

    std::vector<RaagAutomorphism> image;
    for (std::size_t i = 0; i < _pcs.size(); ++i)
      image.push_back(power(_pc_auts[i], eta[i]));

    for (std::size_t v = 0; v < _inversions.size(); ++v) {
      for (std::size_t i = 0; i < _pcs.size(); ++i) {
        std::string rel = "iota_" + g.name(v) + " . " + describe(g, _pcs[i]);

        int e = _action[v][i];
        if (e == 0) {
          report.fail(rel + " is not a power of the partial conjugation");
          continue;
        }

        auto lhs = conjugate_automorphism(_inversions[v], image[i]);
        auto rhs = power(image[i], e);
        if (!automorphisms_equal(lhs, rhs))
          report.fail(rel + " not preserved");
      }
    }

    for (auto [a, b] : _commuting) {
      if (!automorphisms_commute(image[a], image[b]))
        report.fail(describe(g, _pcs[a]) + " and " + describe(g, _pcs[b]) +
                    " stop commuting");
    }

    // η is an involution.
    for (std::size_t i = 0; i < _pcs.size(); ++i) {
      if (!automorphisms_equal(power(image[i], eta[i]), _pc_auts[i]))
        report.fail("eta twice moves " + describe(g, _pcs[i]));
    }

    report.note(std::to_string(_inversions.size() * _pcs.size()) +
                " inversion relations, " + std::to_string(_commuting.size()) +
                " commutation relations");
    return report;
  }

  /// ι_v γ ι_v^-1 = γ^e for every inversion and partial conjugation.
  bool inversions_act_by_signs() const
  {
    for (auto const &row : _action) {
      for (int e : row) {
        if (e == 0)
          return false;
      }
    }
    return true;
  }

private:
  GraphRef _graph;
  std::vector<PartialConjugation> _pcs;
  std::vector<RaagAutomorphism> _pc_auts;
  std::vector<RaagAutomorphism> _inversions;
  std::vector<std::vector<int>> _action;
  std::vector<std::pair<std::size_t, std::size_t>> _commuting;
};

inline CheckReport eta_relation_check(GraphRef const &graph, Vertex c,
                                      std::size_t j)
{ return EtaChecker(graph).check(c, j); }

} // namespace raag

#endif // RAAG_PC_BOUNDS_HPP
