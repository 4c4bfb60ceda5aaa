#ifndef RAAG_DECOMPOSITION_HPP
#define RAAG_DECOMPOSITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "automorphism.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "matrix.hpp"

namespace raag
{

/// Vertices adjacent to every other vertex.
inline VertexSet social_vertices(SimplicialGraph const &g)
{
  VertexSet res;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) + 1 == g.num_vertices())
      res.push_back(v);
  }
  return res;
}

/// Γ = join(S, Δ) with S the social vertices, so A_Γ ≅ Z^k × A_Δ.
struct JoinDecomposition
{
  GraphRef graph;
  VertexSet social;
  VertexSet delta_vertices;   // Γ-index of each Δ vertex
  GraphRef delta;
  std::size_t k = 0;
};

inline JoinDecomposition join_decomposition(GraphRef const &graph)
{
  auto const &g = *graph;

  JoinDecomposition d;
  d.graph = graph;
  d.social = social_vertices(g);
  d.k = d.social.size();
  d.delta_vertices = set_difference(all_vertices(g), d.social);
  d.delta = share(full_subgraph(g, d.delta_vertices));

  // Γ must be exactly join(S, Δ), and Δ must have no social vertex of its
  // own (any such vertex would have been social in Γ).
  for (Vertex s : d.social) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v != s && !g.adjacent(s, v))
        throw verification_failure("social vertex with a missing edge");
    }
  }
  if (!social_vertices(*d.delta).empty())
    throw verification_failure("Δ has a social vertex");

  return d;
}

// ---------------------------------------------------------------------------
// Lateral transvections

/// Basis τ_{s,a} (s ∈ S, a ∈ Δ) of the lateral subgroup, grouped into
/// Δ-blocks by s. Vertices are Γ indices.
struct LateralLattice
{
  std::vector<Transvection> basis;
  std::size_t rank() const { return basis.size(); }
};

inline LateralLattice lateral_transvections(JoinDecomposition const &d)
{
  if (d.k == 0)
    throw precondition_error("no social vertices: no lateral transvections");
  if (d.delta_vertices.empty())
    throw precondition_error("Δ is empty: no lateral transvections");

  LateralLattice lattice;
  for (Vertex s : d.social) {
    for (Vertex a : d.delta_vertices)
      lattice.basis.push_back(Transvection{s, a});
  }
  return lattice;
}

inline std::vector<RaagAutomorphism>
lateral_automorphisms(JoinDecomposition const &d, LateralLattice const &l)
{
  std::vector<RaagAutomorphism> res;
  for (auto const &tau : l.basis)
    res.push_back(ls_to_automorphism(d.graph, tau));
  return res;
}

/// Pairwise commutation of the lateral transvections, the conjugation
/// identity τ_{t,a} τ_{s,a} τ_{t,a}^-1 = τ_{s,a}, and linear independence of
/// their abelianizations (rank k·|Δ|).
inline CheckReport verify_lateral_lattice(JoinDecomposition const &d)
{
  CheckReport report;
  report.name = "lateral lattice";

  if (d.k == 0 || d.delta_vertices.empty()) {
    report.skipped = true;
    report.note("no lateral transvections");
    return report;
  }

  auto const &g = *d.graph;
  auto lattice = lateral_transvections(d);
  auto taus = lateral_automorphisms(d, lattice);

  for (std::size_t i = 0; i < taus.size(); ++i) {
    for (std::size_t j = i + 1; j < taus.size(); ++j) {
      if (!automorphisms_commute(taus[i], taus[j]))
        report.fail(describe(g, lattice.basis[i]) + " and " +
                    describe(g, lattice.basis[j]) + " do not commute");

      bool same_target = lattice.basis[i].target == lattice.basis[j].target;
      if (same_target &&
          !automorphisms_equal(conjugate_automorphism(taus[j], taus[i]),
                               taus[i]))
        report.fail("conjugating " + describe(g, lattice.basis[i]) + " by " +
                    describe(g, lattice.basis[j]) + " changes it");
    }
  }

  std::size_t n = g.num_vertices();
  auto id = IntMatrix::identity(n);
  IntMatrix stacked(taus.size(), n * n);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    auto diff = abelianization_matrix(taus[i]) - id;
    for (std::size_t e = 0; e < n * n; ++e)
      stacked(i, e) = diff.data()[e];
  }

  std::size_t r = rank(stacked);
  report.note("rank " + std::to_string(r));
  if (r != d.k * d.delta_vertices.size())
    report.fail("abelianized lateral transvections have rank " +
                std::to_string(r) + ", expected " +
                std::to_string(d.k * d.delta_vertices.size()));

  return report;
}

// ---------------------------------------------------------------------------
// Sign classes

/// Partition of Δ's vertices (Δ indices) into blocks that must share a sign
/// in any diagonal matrix centralizing the abelianized Aut(A_Δ).
struct SignClassPartition
{
  std::vector<VertexSet> classes;
  std::vector<std::size_t> class_of;
  std::size_t m = 0;

  bool operator==(SignClassPartition const &) const = default;
};

/// Union-find closure of: same orbit index p of the label T(p,q,r), and
/// x dominates y for x ≠ y. `priority` selects the label tie-breaks.
inline SignClassPartition
sign_classes(SimplicialGraph const &delta,
             std::vector<std::size_t> const &priority = {})
{
  std::size_t n = delta.num_vertices();
  auto ds = domination_structure(delta, graph_automorphisms(delta), priority);

  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t *, std::size_t *> sets(rank.data(),
                                                          parent.data());
  for (Vertex v = 0; v < n; ++v)
    sets.make_set(v);

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y)
        continue;
      if (ds.labels[x].orbit == ds.labels[y].orbit || ds.leq[y][x])
        sets.union_set(x, y);
    }
  }

  SignClassPartition res;
  res.class_of.assign(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (res.class_of[v] != n)
      continue;
    VertexSet cls;
    for (Vertex w = v; w < n; ++w) {
      if (sets.find_set(w) == sets.find_set(v)) {
        cls.push_back(w);
        res.class_of[w] = res.classes.size();
      }
    }
    res.classes.push_back(std::move(cls));
  }
  res.m = res.classes.size();
  return res;
}

inline SignClassPartition sign_classes(JoinDecomposition const &d)
{ return sign_classes(*d.delta); }

inline BigInt centralizer_order(JoinDecomposition const &d)
{
  if (d.delta_vertices.empty())
    throw precondition_error("Δ is empty");
  return BigInt(1) << sign_classes(d).m;
}

/// Abelianizations of the LS generators of Aut(A_Δ); they generate the image
/// of Aut(A_Δ) in GL(|Δ|, Z).
inline std::vector<IntMatrix> abelianized_generators(GraphRef const &delta)
{
  std::vector<IntMatrix> res;
  for (auto const &gen : enumerate_ls_generators(*delta))
    res.push_back(abelianization_matrix(ls_to_automorphism(delta, gen)));
  return res;
}

/// Whether diag(signs) commutes with every matrix in `generators`.
inline bool diagonal_centralizes(std::vector<IntMatrix> const &generators,
                                 std::vector<int> const &signs)
{
  std::vector<BigInt> entries(signs.begin(), signs.end());
  auto e = IntMatrix::diagonal(entries);
  for (auto const &m : generators) {
    if (e * m != m * e)
      return false;
  }
  return true;
}

/// `signs` gives one ±1 per Δ vertex (Δ order).
inline bool check_sign_matrix_centralizes(JoinDecomposition const &d,
                                          std::vector<int> const &signs)
{
  if (signs.size() != d.delta->num_vertices())
    throw precondition_error("need one sign per vertex of Δ");
  for (int s : signs) {
    if (s != 1 && s != -1)
      throw precondition_error("signs must be +1 or -1");
  }
  return diagonal_centralizes(abelianized_generators(d.delta), signs);
}

/// Spreads one sign per block of `blocks` onto the vertices.
inline std::vector<int> signs_from_blocks(std::vector<VertexSet> const &blocks,
                                          std::vector<int> const &block_signs)
{
  if (blocks.size() != block_signs.size())
    throw precondition_error("need one sign per block");

  std::size_t n = 0;
  for (auto const &b : blocks)
    n += b.size();

  std::vector<int> res(n, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Vertex v : blocks[i])
      res.at(v) = block_signs[i];
  }
  return res;
}

inline bool constant_on_classes(SignClassPartition const &p,
                                std::vector<int> const &signs)
{
  for (auto const &cls : p.classes) {
    for (Vertex v : cls) {
      if (signs.at(v) != signs.at(cls.front()))
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sign automorphisms of Aut(A_Γ)

/// The product of the inversions of all social vertices; it inverts every
/// generator of Z^k.
inline RaagAutomorphism central_inversion(JoinDecomposition const &d)
{
  auto res = RaagAutomorphism::identity(d.graph);
  for (Vertex s : d.social)
    res = compose(res, ls_to_automorphism(d.graph, Inversion{s}));
  return res;
}

/// Action of the automorphism of Aut(A_Γ) that acts on the lateral
/// subgroup by diag(signs) and fixes GL(k,Z) × Aut(A_Δ) pointwise.
struct SignAutomorphism
{
  struct LateralImage
  {
    Transvection tau;
    int exponent;
    RaagAutomorphism image;
  };

  std::vector<int> signs;
  std::vector<LateralImage> lateral;

  bool fixes_lateral() const
  {
    for (auto const &l : lateral) {
      if (l.exponent != 1)
        return false;
    }
    return true;
  }
};

inline SignAutomorphism sign_automorphism(JoinDecomposition const &d,
                                          std::vector<int> const &signs)
{
  if (!check_sign_matrix_centralizes(d, signs))
    throw precondition_error("signs do not centralize the abelianized "
                             "automorphism group of Δ");

  SignAutomorphism res;
  res.signs = signs;

  auto lattice = lateral_transvections(d);
  for (auto const &tau : lattice.basis) {
    auto local = static_cast<std::size_t>(
      std::lower_bound(d.delta_vertices.begin(), d.delta_vertices.end(),
                       tau.target) - d.delta_vertices.begin());
    int e = signs[local];
    res.lateral.push_back({tau, e, power(ls_to_automorphism(d.graph, tau), e)});
  }
  return res;
}

/// R(A) R(B)^-1 = R(AB^-1) is inner iff AB^-1 = ±I: -I is conjugation by
/// the central inversion, I is the identity.
inline bool sign_automorphisms_differ_by_inner(std::vector<int> const &a,
                                               std::vector<int> const &b)
{
  if (a.size() != b.size())
    throw precondition_error("sign vectors of different length");

  bool equal = true, opposite = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    equal = equal && a[i] == b[i];
    opposite = opposite && a[i] == -b[i];
  }
  return equal || opposite;
}

/// Certified lower bound 2^(m-1) on |Out(Aut(A_Γ))| for Γ with a social
/// vertex and nonempty Δ.
inline BigInt out_aut_lower_bound_center(GraphRef const &graph)
{
  auto d = join_decomposition(graph);
  if (d.k == 0)
    throw precondition_error("graph has no social vertex");
  if (d.delta_vertices.empty())
    throw precondition_error("Δ is empty");
  return BigInt(1) << (sign_classes(d).m - 1);
}

/// Conjugates every lateral transvection by every LS generator of Aut(A_Γ)
/// and checks that the result is the product of lateral transvections read
/// off from its abelianization.
inline CheckReport verify_split_normality(JoinDecomposition const &d)
{
  CheckReport report;
  report.name = "split normality";

  if (d.k == 0 || d.delta_vertices.empty()) {
    report.skipped = true;
    report.note("no lateral transvections");
    return report;
  }

  auto const &g = *d.graph;
  std::size_t n = g.num_vertices();
  auto id = IntMatrix::identity(n);
  auto lattice = lateral_transvections(d);
  auto taus = lateral_automorphisms(d, lattice);

  std::vector<bool> is_social(n, false);
  for (Vertex s : d.social)
    is_social[s] = true;

  std::size_t checked = 0;
  for (auto const &gen : enumerate_ls_generators(g)) {
    auto lambda = ls_to_automorphism(d.graph, gen);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      auto conj = conjugate_automorphism(lambda, taus[i]);
      auto diff = abelianization_matrix(conj) - id;

      std::string what = describe(g, gen) + " . " +
                         describe(g, lattice.basis[i]);

      bool in_block = true;
      for (Vertex u = 0; u < n && in_block; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (diff(u, v) != 0 && (!is_social[u] || is_social[v])) {
            in_block = false;
            break;
          }
        }
      }
      if (!in_block) {
        report.fail(what + ": abelianization leaves the lateral block");
        continue;
      }

      auto product = RaagAutomorphism::identity(d.graph);
      for (std::size_t j = 0; j < lattice.basis.size(); ++j) {
        auto coeff = diff(lattice.basis[j].multiplier,
                          lattice.basis[j].target);
        if (coeff != 0)
          product = compose(product,
                            power(taus[j], static_cast<int>(coeff)));
      }

      if (!automorphisms_equal(conj, product))
        report.fail(what + ": " + describe_action(conj) +
                    " is not a product of lateral transvections");
      ++checked;
    }
  }

  report.note(std::to_string(checked) + " conjugates checked");
  return report;
}

/// The central inversion ι sends every lateral transvection to its inverse,
/// so it does not centralize them.
inline CheckReport iota_noncentrality_check(JoinDecomposition const &d)
{
  CheckReport report;
  report.name = "iota non-centrality";

  if (d.k == 0 || d.delta_vertices.empty()) {
    report.skipped = true;
    report.note("no lateral transvections");
    return report;
  }

  auto const &g = *d.graph;
  auto iota = central_inversion(d);
  auto lattice = lateral_transvections(d);
  auto taus = lateral_automorphisms(d, lattice);

  for (std::size_t i = 0; i < taus.size(); ++i) {
    auto conj = conjugate_automorphism(iota, taus[i]);
    if (!automorphisms_equal(conj, invert(taus[i])))
      report.fail("iota does not invert " + describe(g, lattice.basis[i]));
    if (automorphisms_equal(conj, taus[i]))
      report.fail("iota centralizes " + describe(g, lattice.basis[i]));
  }
  return report;
}

} // namespace raag

#endif // RAAG_DECOMPOSITION_HPP
