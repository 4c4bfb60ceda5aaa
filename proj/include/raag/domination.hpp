#ifndef RAAG_DOMINATION_HPP
#define RAAG_DOMINATION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "error.hpp"
#include "graph.hpp"

namespace raag
{

/// y ≤ x, i.e. lk(y) ⊆ st(x). Every vertex dominates itself.
inline bool dominates(SimplicialGraph const &g, Vertex x, Vertex y)
{ return is_subset(link(g, y), star(g, x)); }

/// Whether some vertex is dominated by a different vertex.
inline bool has_dominated_vertex(SimplicialGraph const &g)
{
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
      if (x != y && dominates(g, x, y))
        return true;
    }
  }
  return false;
}

/// Position T(p,q,r) of a vertex: the r-th vertex of the q-th domination
/// class of the p-th orbit. All components are 1-based.
struct DominationLabel
{
  std::size_t orbit = 0;
  std::size_t cls = 0;
  std::size_t position = 0;

  bool operator==(DominationLabel const &) const = default;
  auto operator<=>(DominationLabel const &) const = default;
};

struct DominationStructure
{
  // leq[y][x] holds iff y ≤ x.
  std::vector<std::vector<bool>> leq;

  // Domination classes, each sorted, ordered by smallest member.
  std::vector<VertexSet> classes;
  std::vector<std::size_t> class_of;

  // class_leq[i][j] holds iff classes[i] ≤ classes[j].
  std::vector<std::vector<bool>> class_leq;

  // Aut(Γ)-orbits on domination classes (class indices, sorted), ordered by
  // smallest class index.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of_class;

  // orbit_ll[a][b] holds iff orbits[a] ≪ orbits[b].
  std::vector<std::vector<bool>> orbit_ll;

  // Linear extension of ≪; entry p-1 is the index of the p-th orbit.
  std::vector<std::size_t> orbit_sequence;

  std::vector<DominationLabel> labels;

  Vertex vertex_at(DominationLabel const &label) const
  {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw precondition_error("no vertex carries the requested label");
    return static_cast<Vertex>(it - labels.begin());
  }
};

namespace detail
{

inline std::vector<std::size_t>
canonical_priority(SimplicialGraph const &g)
{
  std::vector<std::size_t> res(g.num_vertices());
  std::iota(res.begin(), res.end(), 0);
  return res;
}

} // namespace detail

/// Builds the domination structure of `g`.
///
/// `priority[v]` ranks vertices for every tie-break (linear extension of ≪,
/// class order inside an orbit, vertex order inside a class); by default it
/// is the declaration order.
inline DominationStructure
domination_structure(SimplicialGraph const &g,
                     std::vector<GraphPermutation> const &automorphisms,
                     std::vector<std::size_t> priority = {})
{
  std::size_t n = g.num_vertices();
  if (priority.empty())
    priority = detail::canonical_priority(g);
  if (priority.size() != n)
    throw precondition_error("priority must rank every vertex");

  DominationStructure ds;

  ds.leq.assign(n, std::vector<bool>(n, false));
  for (Vertex y = 0; y < n; ++y) {
    for (Vertex x = 0; x < n; ++x)
      ds.leq[y][x] = dominates(g, x, y);
  }

  ds.class_of.assign(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (ds.class_of[v] != n)
      continue;

    VertexSet cls;
    for (Vertex w = v; w < n; ++w) {
      if (ds.leq[v][w] && ds.leq[w][v]) {
        cls.push_back(w);
        ds.class_of[w] = ds.classes.size();
      }
    }
    ds.classes.push_back(std::move(cls));
  }

  std::size_t num_classes = ds.classes.size();
  ds.class_leq.assign(num_classes, std::vector<bool>(num_classes, false));
  for (std::size_t i = 0; i < num_classes; ++i) {
    for (std::size_t j = 0; j < num_classes; ++j)
      ds.class_leq[i][j] = ds.leq[ds.classes[i].front()][ds.classes[j].front()];
  }

  // Orbits of Aut(Γ) on classes.
  std::vector<std::size_t> rank(num_classes), parent(num_classes);
  boost::disjoint_sets<std::size_t *, std::size_t *> orbit_sets(rank.data(),
                                                                parent.data());
  for (std::size_t i = 0; i < num_classes; ++i)
    orbit_sets.make_set(i);

  for (auto const &phi : automorphisms) {
    for (std::size_t i = 0; i < num_classes; ++i)
      orbit_sets.union_set(i, ds.class_of[phi(ds.classes[i].front())]);
  }

  ds.orbit_of_class.assign(num_classes, num_classes);
  for (std::size_t i = 0; i < num_classes; ++i) {
    if (ds.orbit_of_class[i] != num_classes)
      continue;

    std::vector<std::size_t> orbit;
    for (std::size_t j = i; j < num_classes; ++j) {
      if (orbit_sets.find_set(j) == orbit_sets.find_set(i)) {
        orbit.push_back(j);
        ds.orbit_of_class[j] = ds.orbits.size();
      }
    }
    ds.orbits.push_back(std::move(orbit));
  }

  // O_[v] ≪ O_[w] iff [v] ≤ [w'] for some [w'] in O_[w].
  std::size_t num_orbits = ds.orbits.size();
  ds.orbit_ll.assign(num_orbits, std::vector<bool>(num_orbits, false));
  for (std::size_t a = 0; a < num_orbits; ++a) {
    std::size_t v_cls = ds.orbits[a].front();
    for (std::size_t b = 0; b < num_orbits; ++b) {
      for (std::size_t w_cls : ds.orbits[b]) {
        if (ds.class_leq[v_cls][w_cls]) {
          ds.orbit_ll[a][b] = true;
          break;
        }
      }
    }
  }

  auto min_priority = [&](VertexSet const &vs) {
    std::size_t best = n;
    for (Vertex v : vs)
      best = std::min(best, priority[v]);
    return best;
  };

  std::vector<std::size_t> orbit_priority(num_orbits, n);
  for (std::size_t a = 0; a < num_orbits; ++a) {
    for (std::size_t c : ds.orbits[a])
      orbit_priority[a] = std::min(orbit_priority[a],
                                   min_priority(ds.classes[c]));
  }

  // Kahn's algorithm on the strict part of ≪, ties by priority.
  std::vector<std::size_t> indegree(num_orbits, 0);
  for (std::size_t a = 0; a < num_orbits; ++a) {
    for (std::size_t b = 0; b < num_orbits; ++b) {
      if (a != b && ds.orbit_ll[a][b])
        ++indegree[b];
    }
  }

  std::vector<bool> emitted(num_orbits, false);
  while (ds.orbit_sequence.size() < num_orbits) {
    std::size_t next = num_orbits;
    for (std::size_t a = 0; a < num_orbits; ++a) {
      if (emitted[a] || indegree[a] != 0)
        continue;
      if (next == num_orbits || orbit_priority[a] < orbit_priority[next])
        next = a;
    }

    if (next == num_orbits)
      throw verification_failure("domination order on orbits has a cycle");

    emitted[next] = true;
    ds.orbit_sequence.push_back(next);
    for (std::size_t b = 0; b < num_orbits; ++b) {
      if (b != next && ds.orbit_ll[next][b])
        --indegree[b];
    }
  }

  ds.labels.resize(n);
  for (std::size_t p = 0; p < num_orbits; ++p) {
    auto classes = ds.orbits[ds.orbit_sequence[p]];
    std::sort(classes.begin(), classes.end(),
              [&](std::size_t lhs, std::size_t rhs) {
                return min_priority(ds.classes[lhs]) <
                       min_priority(ds.classes[rhs]);
              });

    for (std::size_t q = 0; q < classes.size(); ++q) {
      auto members = ds.classes[classes[q]];
      std::sort(members.begin(), members.end(), [&](Vertex lhs, Vertex rhs) {
        return priority[lhs] < priority[rhs];
      });

      for (std::size_t r = 0; r < members.size(); ++r)
        ds.labels[members[r]] = DominationLabel{p + 1, q + 1, r + 1};
    }
  }

  return ds;
}

inline DominationStructure
domination_structure(SimplicialGraph const &g,
                     std::size_t max_vertices = default_max_vertices)
{ return domination_structure(g, graph_automorphisms(g, max_vertices)); }

/// Checks the star-size argument behind antisymmetry of the class order:
/// [v] ≤ [w] implies |st(v)| ≤ |st(w)|, with equality only if [v] = [w].
/// Also checks that ≤ on classes and ≪ on orbits are partial orders.
inline CheckReport verify_order_antisymmetry(SimplicialGraph const &g,
                                             DominationStructure const &ds)
{
  CheckReport report;
  report.name = "order antisymmetry";

  auto star_size = [&](std::size_t cls) {
    return g.degree(ds.classes[cls].front()) + 1;
  };

  std::size_t nc = ds.classes.size();
  for (std::size_t i = 0; i < nc; ++i) {
    if (!ds.class_leq[i][i])
      report.fail("class " + std::to_string(i) + " is not reflexive");

    for (std::size_t j = 0; j < nc; ++j) {
      if (!ds.class_leq[i][j])
        continue;

      std::string pair = "[" + g.name(ds.classes[i].front()) + "] <= [" +
                         g.name(ds.classes[j].front()) + "]";

      if (star_size(i) > star_size(j))
        report.fail(pair + " but |st| decreases");
      if (i != j && star_size(i) == star_size(j))
        report.fail(pair + " with equal |st| but distinct classes");
      if (i != j && ds.class_leq[j][i])
        report.fail(pair + " in both directions");

      for (std::size_t k = 0; k < nc; ++k) {
        if (ds.class_leq[j][k] && !ds.class_leq[i][k])
          report.fail(pair + " breaks transitivity");
      }
    }
  }

  std::size_t no = ds.orbits.size();
  for (std::size_t a = 0; a < no; ++a) {
    if (!ds.orbit_ll[a][a])
      report.fail("orbit relation not reflexive");
    for (std::size_t b = 0; b < no; ++b) {
      if (a != b && ds.orbit_ll[a][b] && ds.orbit_ll[b][a])
        report.fail("orbit relation not antisymmetric");
      for (std::size_t c = 0; c < no; ++c) {
        if (ds.orbit_ll[a][b] && ds.orbit_ll[b][c] && !ds.orbit_ll[a][c])
          report.fail("orbit relation not transitive");
      }
    }
  }

  return report;
}

inline CheckReport verify_order_antisymmetry(SimplicialGraph const &g)
{ return verify_order_antisymmetry(g, domination_structure(g)); }

} // namespace raag

#endif // RAAG_DOMINATION_HPP
