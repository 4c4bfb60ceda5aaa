#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace raag
{

using Vertex = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

inline bool valid_vertex_name(std::string_view name)
{
  if (name.empty())
    return false;

  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_';
  });
}

/// Finite simple undirected graph with named vertices.
///
/// Vertices are identified by their index in declaration order; that order
/// is the canonical tie-break order everywhere in the library. Values are
/// immutable once constructed.
class SimplicialGraph
{
public:
  SimplicialGraph() = default;

  SimplicialGraph(std::vector<std::string> names,
                  std::vector<std::pair<Vertex, Vertex>> const &edges)
  : _names(std::move(names)),
    _neighbors(_names.size()),
    _adjacency(_names.size(), std::vector<bool>(_names.size(), false))
  {
    for (Vertex v = 0; v < _names.size(); ++v) {
      if (!valid_vertex_name(_names[v]))
        throw error("invalid vertex name '" + _names[v] + "'");

      if (!_index.emplace(_names[v], v).second)
        throw error("duplicate vertex '" + _names[v] + "'");
    }

    for (auto [u, w] : edges) {
      if (u >= _names.size() || w >= _names.size())
        throw unknown_vertex("edge endpoint out of range");
      if (u == w)
        throw error("self-loop at '" + _names[u] + "'");
      if (_adjacency[u][w])
        throw error("duplicate edge '" + _names[u] + "' '" + _names[w] + "'");

      _adjacency[u][w] = _adjacency[w][u] = true;
      _neighbors[u].push_back(w);
      _neighbors[w].push_back(u);
      ++_num_edges;
    }

    for (auto &nbs : _neighbors)
      std::sort(nbs.begin(), nbs.end());
  }

  std::size_t num_vertices() const { return _names.size(); }
  std::size_t num_edges() const { return _num_edges; }
  bool empty() const { return _names.empty(); }

  std::vector<std::string> const &names() const { return _names; }

  std::string const &name(Vertex v) const
  {
    check_vertex(v);
    return _names[v];
  }

  std::optional<Vertex> find(std::string_view name) const
  {
    auto it = _index.find(std::string(name));
    if (it == _index.end())
      return std::nullopt;
    return it->second;
  }

  Vertex index_of(std::string_view name) const
  {
    auto v = find(name);
    if (!v)
      throw unknown_vertex("unknown vertex '" + std::string(name) + "'");
    return *v;
  }

  bool adjacent(Vertex u, Vertex w) const
  {
    check_vertex(u);
    check_vertex(w);
    return _adjacency[u][w];
  }

  VertexSet const &neighbors(Vertex v) const
  {
    check_vertex(v);
    return _neighbors[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::vector<std::pair<Vertex, Vertex>> edges() const
  {
    std::vector<std::pair<Vertex, Vertex>> res;
    for (Vertex u = 0; u < num_vertices(); ++u) {
      for (Vertex w : _neighbors[u]) {
        if (u < w)
          res.emplace_back(u, w);
      }
    }
    return res;
  }

  void check_vertex(Vertex v) const
  {
    if (v >= _names.size())
      throw unknown_vertex("vertex index " + std::to_string(v) +
                           " out of range");
  }

  bool operator==(SimplicialGraph const &other) const
  { return _names == other._names && _adjacency == other._adjacency; }

  bool operator!=(SimplicialGraph const &other) const
  { return !(*this == other); }

private:
  std::vector<std::string> _names;
  std::map<std::string, Vertex, std::less<>> _index;
  std::vector<VertexSet> _neighbors;
  std::vector<std::vector<bool>> _adjacency;
  std::size_t _num_edges = 0;
};

/// Builds a graph from vertex names and edges given by name.
inline SimplicialGraph
make_graph(std::vector<std::string> names,
           std::vector<std::pair<std::string, std::string>> const &edges)
{
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < names.size(); ++v)
    index.emplace(names[v], v);

  std::vector<std::pair<Vertex, Vertex>> idx_edges;
  for (auto const &[a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw unknown_vertex("unknown edge endpoint '" +
                           (ia == index.end() ? a : b) + "'");
    idx_edges.emplace_back(ia->second, ib->second);
  }

  return SimplicialGraph(std::move(names), idx_edges);
}

inline SimplicialGraph edgeless_graph(std::vector<std::string> names)
{ return SimplicialGraph(std::move(names), {}); }

inline SimplicialGraph complete_graph(std::vector<std::string> names)
{
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < names.size(); ++u) {
    for (Vertex w = u + 1; w < names.size(); ++w)
      edges.emplace_back(u, w);
  }
  return SimplicialGraph(std::move(names), edges);
}

inline SimplicialGraph path_graph(std::vector<std::string> names)
{
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < names.size(); ++v)
    edges.emplace_back(v - 1, v);
  return SimplicialGraph(std::move(names), edges);
}

inline SimplicialGraph cycle_graph(std::vector<std::string> names)
{
  if (names.size() < 3)
    throw precondition_error("a cycle needs at least three vertices");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < names.size(); ++v)
    edges.emplace_back(v - 1, v);
  edges.emplace_back(names.size() - 1, 0);
  return SimplicialGraph(std::move(names), edges);
}

// ---------------------------------------------------------------------------
// Graph file format

/// Parses the line-oriented graph format:
///
///   # comment
///   v <name>
///   e <name> <name>
///
/// Vertices must be declared before they are used in an edge.
inline SimplicialGraph parse_graph(std::string_view text)
{
  std::vector<std::string> names;
  std::map<std::string, Vertex, std::less<>> index;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<bool>> seen;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;

    if (!line.empty() && line.back() == '\r')
      line.pop_back();

    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive.front() == '#')
      continue;

    std::vector<std::string> args;
    for (std::string tok; ls >> tok;)
      args.push_back(tok);

    if (directive == "v") {
      if (args.size() != 1)
        throw parse_error(lineno, "expected 'v <name>'");
      if (!valid_vertex_name(args[0]))
        throw parse_error(lineno, "invalid vertex name '" + args[0] + "'");
      if (index.count(args[0]))
        throw parse_error(lineno, "duplicate vertex '" + args[0] + "'");

      index.emplace(args[0], names.size());
      names.push_back(args[0]);

    } else if (directive == "e") {
      if (args.size() != 2)
        throw parse_error(lineno, "expected 'e <name> <name>'");

      std::pair<Vertex, Vertex> edge;
      for (int i = 0; i < 2; ++i) {
        auto it = index.find(args[i]);
        if (it == index.end())
          throw parse_error(lineno, "unknown endpoint '" + args[i] + "'");
        (i == 0 ? edge.first : edge.second) = it->second;
      }

      if (edge.first == edge.second)
        throw parse_error(lineno, "self-loop at '" + args[0] + "'");

      auto key = std::minmax(edge.first, edge.second);
      for (auto &[a, b] : edges) {
        if (std::minmax(a, b) == key)
          throw parse_error(lineno, "duplicate edge '" + args[0] + "' '" +
                                    args[1] + "'");
      }
      edges.push_back(edge);

    } else {
      throw parse_error(lineno, "unknown directive '" + directive + "'");
    }
  }

  return SimplicialGraph(std::move(names), edges);
}

/// Renders a graph in the format accepted by parse_graph.
inline std::string format_graph(SimplicialGraph const &g)
{
  std::ostringstream out;
  for (auto const &name : g.names())
    out << "v " << name << '\n';
  for (auto [u, w] : g.edges())
    out << "e " << g.name(u) << ' ' << g.name(w) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Local structure

inline VertexSet link(SimplicialGraph const &g, Vertex v)
{ return g.neighbors(v); }

inline VertexSet star(SimplicialGraph const &g, Vertex v)
{
  VertexSet res = g.neighbors(v);
  res.insert(std::lower_bound(res.begin(), res.end(), v), v);
  return res;
}

inline VertexSet normalized(VertexSet s)
{
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool is_subset(VertexSet const &sub, VertexSet const &super)
{ return std::includes(super.begin(), super.end(), sub.begin(), sub.end()); }

inline VertexSet set_intersection(VertexSet const &a, VertexSet const &b)
{
  VertexSet res;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(res));
  return res;
}

inline VertexSet set_difference(VertexSet const &a, VertexSet const &b)
{
  VertexSet res;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(res));
  return res;
}

inline VertexSet all_vertices(SimplicialGraph const &g)
{
  VertexSet res(g.num_vertices());
  for (Vertex v = 0; v < res.size(); ++v)
    res[v] = v;
  return res;
}

/// Induced subgraph together with the parent index of each of its vertices.
struct InducedSubgraph
{
  SimplicialGraph graph;
  std::vector<Vertex> parent;
};

inline InducedSubgraph induced_subgraph(SimplicialGraph const &g,
                                        VertexSet const &subset)
{
  VertexSet vs = normalized(subset);
  for (Vertex v : vs)
    g.check_vertex(v);

  std::vector<std::size_t> local(g.num_vertices(), vs.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    local[vs[i]] = i;
    names.push_back(g.name(vs[i]));
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (Vertex w : g.neighbors(vs[i])) {
      if (local[w] < vs.size() && i < local[w])
        edges.emplace_back(i, local[w]);
    }
  }

  return {SimplicialGraph(std::move(names), edges), std::move(vs)};
}

inline SimplicialGraph full_subgraph(SimplicialGraph const &g,
                                     VertexSet const &subset)
{ return induced_subgraph(g, subset).graph; }

/// Connected components of the subgraph induced on `subset`, each sorted,
/// ordered by smallest member.
inline std::vector<VertexSet> components_within(SimplicialGraph const &g,
                                                VertexSet const &subset)
{
  std::vector<bool> inside(g.num_vertices(), false), visited(g.num_vertices(),
                                                             false);
  for (Vertex v : subset) {
    g.check_vertex(v);
    inside[v] = true;
  }

  std::vector<VertexSet> res;
  for (Vertex root : normalized(subset)) {
    if (visited[root])
      continue;

    VertexSet comp;
    std::vector<Vertex> stack{root};
    visited[root] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (inside[w] && !visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }

    std::sort(comp.begin(), comp.end());
    res.push_back(std::move(comp));
  }

  return res;
}

inline std::vector<VertexSet> connected_components(SimplicialGraph const &g)
{ return components_within(g, all_vertices(g)); }

/// Components of Γ \ st(c).
inline std::vector<VertexSet> star_cut_components(SimplicialGraph const &g,
                                                  Vertex c)
{ return components_within(g, set_difference(all_vertices(g), star(g, c))); }

// ---------------------------------------------------------------------------
// Joins and unions

inline SimplicialGraph
disjoint_union(std::vector<SimplicialGraph> const &gs, bool join_all = false)
{
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::pair<Vertex, Vertex>> ranges;

  for (auto const &g : gs) {
    Vertex offset = names.size();
    for (auto const &name : g.names())
      names.push_back(name);
    for (auto [u, w] : g.edges())
      edges.emplace_back(offset + u, offset + w);
    ranges.emplace_back(offset, names.size());
  }

  if (join_all) {
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      for (std::size_t j = i + 1; j < ranges.size(); ++j) {
        for (Vertex u = ranges[i].first; u < ranges[i].second; ++u) {
          for (Vertex w = ranges[j].first; w < ranges[j].second; ++w)
            edges.emplace_back(u, w);
        }
      }
    }
  }

  std::map<std::string, int> seen;
  for (auto const &name : names) {
    if (++seen[name] > 1)
      throw precondition_error("vertex name '" + name +
                               "' occurs in more than one graph");
  }

  return SimplicialGraph(std::move(names), edges);
}

/// Disjoint union of the inputs plus every edge between different inputs.
inline SimplicialGraph join(std::vector<SimplicialGraph> const &gs)
{ return disjoint_union(gs, true); }

// ---------------------------------------------------------------------------
// Automorphisms

/// Bijection on vertex indices; image of v is mapping[v].
struct GraphPermutation
{
  std::vector<Vertex> mapping;

  static GraphPermutation identity(std::size_t n)
  {
    GraphPermutation p;
    p.mapping.resize(n);
    for (Vertex v = 0; v < n; ++v)
      p.mapping[v] = v;
    return p;
  }

  std::size_t degree() const { return mapping.size(); }

  Vertex operator()(Vertex v) const { return mapping.at(v); }

  bool is_identity() const
  {
    for (Vertex v = 0; v < mapping.size(); ++v) {
      if (mapping[v] != v)
        return false;
    }
    return true;
  }

  GraphPermutation inverse() const
  {
    GraphPermutation res;
    res.mapping.resize(mapping.size());
    for (Vertex v = 0; v < mapping.size(); ++v)
      res.mapping[mapping[v]] = v;
    return res;
  }

  // (*this)(rhs(v))
  GraphPermutation operator*(GraphPermutation const &rhs) const
  {
    GraphPermutation res;
    res.mapping.resize(mapping.size());
    for (Vertex v = 0; v < mapping.size(); ++v)
      res.mapping[v] = mapping[rhs.mapping[v]];
    return res;
  }

  bool operator==(GraphPermutation const &) const = default;
  auto operator<=>(GraphPermutation const &) const = default;
};

inline bool is_graph_automorphism(SimplicialGraph const &g,
                                  GraphPermutation const &p)
{
  if (p.degree() != g.num_vertices())
    return false;

  std::vector<bool> hit(p.degree(), false);
  for (Vertex v : p.mapping) {
    if (v >= hit.size() || hit[v])
      return false;
    hit[v] = true;
  }

  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex w = u + 1; w < g.num_vertices(); ++w) {
      if (g.adjacent(u, w) != g.adjacent(p(u), p(w)))
        return false;
    }
  }
  return true;
}

namespace detail
{

// Colour refinement: repeatedly split colour classes by the multiset of
// neighbour colours until stable. The colouring is automorphism-invariant.
inline std::vector<std::size_t> refined_colouring(SimplicialGraph const &g)
{
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v)
    colour[v] = g.degree(v);

  std::size_t num_colours = 0;
  for (;;) {
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Key> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      keys[v].first = colour[v];
      for (Vertex w : g.neighbors(v))
        keys[v].second.push_back(colour[w]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }

    std::vector<Key> distinct(keys);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());

    for (Vertex v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
        distinct.begin());
    }

    if (distinct.size() == num_colours)
      break;
    num_colours = distinct.size();
  }

  return colour;
}

} // namespace detail

inline constexpr std::size_t default_max_vertices = 64;

/// Enumerates Aut(Γ) by backtracking over a colour-refined partition.
///
/// The result is sorted lexicographically by mapping, so the identity always
/// comes first.
inline std::vector<GraphPermutation>
graph_automorphisms(SimplicialGraph const &g,
                    std::size_t max_vertices = default_max_vertices)
{
  std::size_t n = g.num_vertices();
  if (n > max_vertices)
    throw size_bound_exceeded("graph has " + std::to_string(n) +
                              " vertices, automorphism search is bounded by " +
                              std::to_string(max_vertices));

  auto colour = detail::refined_colouring(g);

  std::vector<std::size_t> cell_size(n + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    ++cell_size[colour[v]];

  // Search order: greedily pick the vertex with most already-placed
  // neighbours so adjacency constraints prune early.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_nbs(n, 0);
  while (order.size() < n) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v])
        continue;
      if (best == n ||
          placed_nbs[v] > placed_nbs[best] ||
          (placed_nbs[v] == placed_nbs[best] &&
           cell_size[colour[v]] < cell_size[colour[best]])) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      ++placed_nbs[w];
  }

  std::vector<GraphPermutation> res;
  std::vector<Vertex> image(n, n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto &&self, std::size_t depth) -> void {
    if (depth == n) {
      res.push_back(GraphPermutation{image});
      return;
    }

    Vertex v = order[depth];
    for (Vertex cand = 0; cand < n; ++cand) {
      if (used[cand] || colour[cand] != colour[v])
        continue;

      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        Vertex u = order[i];
        if (g.adjacent(u, v) != g.adjacent(image[u], cand))
          consistent = false;
      }
      if (!consistent)
        continue;

      image[v] = cand;
      used[cand] = true;
      self(self, depth + 1);
      used[cand] = false;
      image[v] = n;
    }
  };
  extend(extend, 0);

  std::sort(res.begin(), res.end());
  return res;
}

inline bool is_asymmetric(SimplicialGraph const &g,
                          std::size_t max_vertices = default_max_vertices)
{ return graph_automorphisms(g, max_vertices).size() == 1; }

} // namespace raag

#endif // RAAG_GRAPH_HPP
