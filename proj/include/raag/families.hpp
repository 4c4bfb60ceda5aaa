#ifndef RAAG_FAMILIES_HPP
#define RAAG_FAMILIES_HPP

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "pc_bounds.hpp"

namespace raag
{

/// The Frucht graph: 12-cycle plus chords from the LCF code
/// [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2]. Vertices are named 0..11.
///
/// Its defining properties (3-regular, 18 edges, asymmetric, austere) are
/// rechecked on every call.
inline SimplicialGraph frucht()
{
  constexpr std::array<int, 12> lcf{-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
  constexpr int n = 12;

  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(std::to_string(i));

  std::set<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j : {(i + 1) % n, ((i + lcf[i]) % n + n) % n}) {
      auto [lo, hi] = std::minmax(i, j);
      edges.emplace(static_cast<Vertex>(lo), static_cast<Vertex>(hi));
    }
  }

  SimplicialGraph g(std::move(names), {edges.begin(), edges.end()});

  if (g.num_edges() != 18)
    throw verification_failure("Frucht graph does not have 18 edges");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3)
      throw verification_failure("Frucht graph is not 3-regular");
  }
  if (austerity(g).verdict != Austerity::austere)
    throw verification_failure("Frucht graph is not austere");

  return g;
}

/// e_1 < ... < e_t with e_0 = 0, t ≥ 3, all gaps e_i - e_{i-1} > 2 and
/// pairwise distinct.
struct SpokeSet
{
  std::vector<std::size_t> e;

  std::size_t t() const { return e.size(); }

  std::vector<std::size_t> gaps() const
  {
    std::vector<std::size_t> res;
    std::size_t prev = 0;
    for (auto x : e) {
      res.push_back(x - prev);
      prev = x;
    }
    return res;
  }
};

inline void validate(SpokeSet const &spokes)
{
  if (spokes.t() < 3)
    throw precondition_error("spoke set needs at least three entries");

  std::size_t prev = 0;
  for (auto x : spokes.e) {
    if (x <= prev)
      throw precondition_error("spokes must be positive and strictly "
                               "increasing");
    prev = x;
  }

  auto gaps = spokes.gaps();
  for (auto gap : gaps) {
    if (gap <= 2)
      throw precondition_error("condition (1) violated: gap " +
                               std::to_string(gap) + " is not greater than 2");
  }

  std::set<std::size_t> distinct(gaps.begin(), gaps.end());
  if (distinct.size() != gaps.size())
    throw precondition_error("condition (2) violated: gaps are not pairwise "
                             "distinct");
}

/// Cycle on vertices 0..e_t-1 plus a hub `c` adjacent to 0, e_1, ...,
/// e_{t-1}.
inline SimplicialGraph cycle_hub(SpokeSet const &spokes)
{
  validate(spokes);

  std::size_t len = spokes.e.back();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < len; ++i)
    names.push_back(std::to_string(i));
  names.push_back("c");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < len; ++i)
    edges.emplace_back(i, (i + 1) % len);

  Vertex hub = len;
  edges.emplace_back(0, hub);
  for (std::size_t i = 0; i + 1 < spokes.t(); ++i)
    edges.emplace_back(spokes.e[i], hub);

  return SimplicialGraph(std::move(names), edges);
}

/// join(K_k, K_{sizes[0]} ⊔ K_{sizes[1]} ⊔ ...). Social vertices are named
/// s1..sk, the i-th clique x<i>_1, x<i>_2, ...
inline SimplicialGraph join_complete(std::size_t k,
                                     std::vector<std::size_t> const &sizes)
{
  if (k == 0)
    throw precondition_error("k must be positive");

  std::set<std::size_t> distinct;
  for (auto size : sizes) {
    if (size < 2)
      throw precondition_error("component of size " + std::to_string(size) +
                               " is smaller than 2");
    if (!distinct.insert(size).second)
      throw precondition_error("duplicate component size " +
                               std::to_string(size));
  }

  std::vector<std::string> social;
  for (std::size_t i = 1; i <= k; ++i)
    social.push_back("s" + std::to_string(i));

  std::vector<SimplicialGraph> cliques;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= sizes[i]; ++j)
      names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j));
    cliques.push_back(complete_graph(std::move(names)));
  }

  return join({complete_graph(std::move(social)), disjoint_union(cliques)});
}

} // namespace raag

#endif // RAAG_FAMILIES_HPP
