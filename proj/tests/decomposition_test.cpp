#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gmock/gmock.h"

#include "raag/decomposition.hpp"
#include "raag/families.hpp"
#include "raag/graph.hpp"
#include "raag/report.hpp"

#include "test_support.hpp"

using raag::BigInt;
using raag::SimplicialGraph;
using raag::Vertex;

using testing::ElementsAre;

namespace
{

SimplicialGraph k2_k3()
{
  return raag::disjoint_union({raag::complete_graph({"a1", "a2"}),
                               raag::complete_graph({"b1", "b2", "b3"})});
}

SimplicialGraph k2_k2()
{
  return raag::disjoint_union({raag::complete_graph({"a1", "a2"}),
                               raag::complete_graph({"b1", "b2"})});
}

raag::JoinDecomposition decompose(std::size_t k, SimplicialGraph const &delta)
{
  std::vector<std::string> social;
  for (std::size_t i = 1; i <= k; ++i)
    social.push_back("s" + std::to_string(i));
  return raag::join_decomposition(
    raag::share(raag::join({raag::complete_graph(social), delta})));
}

std::vector<int> signs_of(std::uint64_t bits, std::size_t n)
{
  std::vector<int> res(n);
  for (std::size_t i = 0; i < n; ++i)
    res[i] = (bits >> i) & 1u ? -1 : 1;
  return res;
}

/// The partition as a canonical set of name sets.
std::set<std::set<std::string>> named(SimplicialGraph const &g,
                                      raag::SignClassPartition const &p)
{
  std::set<std::set<std::string>> res;
  for (auto const &cls : p.classes) {
    std::set<std::string> names;
    for (Vertex v : cls)
      names.insert(g.name(v));
    res.insert(names);
  }
  return res;
}

} // namespace

TEST(DecompositionTest, CanFindSocialVertices)
{
  auto g = raag::join_complete(2, {2, 3});
  auto social = raag::social_vertices(g);
  EXPECT_THAT(social, ElementsAre(g.index_of("s1"), g.index_of("s2")));

  EXPECT_TRUE(raag::social_vertices(raag::path_graph({"a", "b", "c", "d"}))
                .empty());
  EXPECT_EQ(4u, raag::social_vertices(
                  raag::complete_graph({"a", "b", "c", "d"})).size());
}

TEST(DecompositionTest, CanDecomposeJoin)
{
  auto d = decompose(2, k2_k3());
  EXPECT_EQ(2u, d.k);
  EXPECT_EQ(5u, d.delta_vertices.size());
  EXPECT_EQ(k2_k3(), *d.delta);

  auto none = raag::join_decomposition(raag::share(raag::frucht()));
  EXPECT_EQ(0u, none.k);
  EXPECT_EQ(12u, none.delta_vertices.size());
}

TEST(DecompositionTest, LateralLattice)
{
  auto d = decompose(2, k2_k3());
  EXPECT_EQ(10u, raag::lateral_transvections(d).rank());
  EXPECT_TRUE(raag::verify_lateral_lattice(d).passed);

  auto small = decompose(1, raag::edgeless_graph({"a", "b"}));
  EXPECT_EQ(2u, raag::lateral_transvections(small).rank());
  EXPECT_TRUE(raag::verify_lateral_lattice(small).passed);

  auto none = raag::join_decomposition(raag::share(raag::frucht()));
  EXPECT_THROW(raag::lateral_transvections(none), raag::precondition_error);
  EXPECT_TRUE(raag::verify_lateral_lattice(none).skipped);
}

TEST(DecompositionTest, SignClassExamples)
{
  EXPECT_EQ(2u, raag::sign_classes(k2_k3()).m);
  EXPECT_EQ(1u, raag::sign_classes(k2_k2()).m);
  EXPECT_EQ(1u, raag::sign_classes(raag::complete_graph({"a"})).m);
  EXPECT_EQ(1u, raag::sign_classes(raag::edgeless_graph({"a", "b"})).m);

  auto sc = raag::sign_classes(k2_k3());
  EXPECT_THAT(sc.classes[0], ElementsAre(0u, 1u));
  EXPECT_THAT(sc.classes[1], ElementsAre(2u, 3u, 4u));

  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<SimplicialGraph> cliques;
    for (std::size_t i = 0; i < d; ++i)
      cliques.push_back(raag::complete_graph(
        test_support::vertex_names(i + 2, "c" + std::to_string(i) + "_")));
    EXPECT_EQ(d, raag::sign_classes(raag::disjoint_union(cliques)).m);
  }
}

TEST(DecompositionTest, SignClassesIgnoreTieBreaks)
{
  std::mt19937_64 rng(43);
  std::vector<SimplicialGraph> corpus;
  for (auto const &entry : raag::delta_corpus())
    corpus.push_back(entry.second);
  for (int i = 0; i < 30; ++i)
    corpus.push_back(test_support::random_graph(3 + i % 4, 0.4, rng));

  for (auto const &g : corpus) {
    auto base = raag::sign_classes(g);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> priority(g.num_vertices());
      std::iota(priority.begin(), priority.end(), 0);
      std::shuffle(priority.begin(), priority.end(), rng);
      EXPECT_EQ(base, raag::sign_classes(g, priority));
    }
  }
}

TEST(DecompositionTest, SignClassesIgnoreRelabeling)
{
  std::mt19937_64 rng(47);
  for (int i = 0; i < 30; ++i) {
    auto g = test_support::random_graph(3 + i % 4, 0.4, rng);

    std::vector<Vertex> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::string> names(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      names[perm[v]] = g.name(v);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, w] : g.edges())
      edges.emplace_back(perm[u], perm[w]);
    SimplicialGraph h(names, edges);

    EXPECT_EQ(named(g, raag::sign_classes(g)), named(h, raag::sign_classes(h)));
  }
}

TEST(DecompositionTest, MatrixCheckExamples)
{
  auto d = decompose(1, k2_k3());
  EXPECT_TRUE(raag::check_sign_matrix_centralizes(d, {1, 1, -1, -1, -1}));
  EXPECT_TRUE(raag::check_sign_matrix_centralizes(d, {1, 1, 1, 1, 1}));
  EXPECT_FALSE(raag::check_sign_matrix_centralizes(d, {1, -1, 1, 1, 1}));

  auto swapped = decompose(1, k2_k2());
  EXPECT_FALSE(raag::check_sign_matrix_centralizes(swapped, {1, 1, -1, -1}))
    << "The swap symmetry forces equal signs.";

  EXPECT_THROW(raag::check_sign_matrix_centralizes(d, {1, 1}),
               raag::precondition_error);
  EXPECT_THROW(raag::check_sign_matrix_centralizes(d, {1, 1, 2, 1, 1}),
               raag::precondition_error);
}

TEST(DecompositionTest, SignClassesMatchMatrixCheck)
{
  std::mt19937_64 rng(53);
  std::vector<SimplicialGraph> corpus;
  for (auto const &entry : raag::delta_corpus())
    corpus.push_back(entry.second);
  for (int i = 0; i < 40; ++i)
    corpus.push_back(test_support::random_graph(2 + i % 5, 0.4, rng));

  for (auto const &delta : corpus) {
    auto gens = raag::abelianized_generators(raag::share(delta));
    auto sc = raag::sign_classes(delta);
    std::size_t n = delta.num_vertices();

    std::size_t passing = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
      auto signs = signs_of(bits, n);
      bool by_matrix = raag::diagonal_centralizes(gens, signs);
      passing += by_matrix;
      EXPECT_EQ(raag::constant_on_classes(sc, signs), by_matrix)
        << raag::format_graph(delta);
    }
    EXPECT_EQ(std::size_t(1) << sc.m, passing);

    if (raag::social_vertices(delta).empty()) {
      auto d = decompose(1, delta);
      EXPECT_EQ(raag::centralizer_order(d), BigInt(passing));
    }
  }
}

TEST(DecompositionTest, SignAutomorphisms)
{
  auto d = decompose(2, k2_k3());
  auto iota = raag::central_inversion(d);

  auto plus = raag::sign_automorphism(d, {1, 1, 1, 1, 1});
  EXPECT_TRUE(plus.fixes_lateral());

  auto minus = raag::sign_automorphism(d, {-1, -1, -1, -1, -1});
  ASSERT_EQ(10u, minus.lateral.size());
  for (auto const &l : minus.lateral) {
    auto tau = raag::ls_to_automorphism(d.graph, l.tau);
    EXPECT_TRUE(raag::automorphisms_equal(
      raag::conjugate_automorphism(iota, tau), l.image));
  }

  auto mixed = raag::sign_automorphism(d, {1, 1, -1, -1, -1});
  EXPECT_FALSE(mixed.fixes_lateral());
  EXPECT_FALSE(raag::sign_automorphisms_differ_by_inner(mixed.signs,
                                                        plus.signs));
  EXPECT_TRUE(raag::sign_automorphisms_differ_by_inner(minus.signs,
                                                       plus.signs));

  EXPECT_THROW(raag::sign_automorphism(d, {1, -1, 1, 1, 1}),
               raag::precondition_error);
}

TEST(DecompositionTest, CenterBound)
{
  EXPECT_EQ(BigInt(2), raag::out_aut_lower_bound_center(
                         raag::share(raag::join_complete(2, {2, 3}))));
  EXPECT_EQ(BigInt(1), raag::out_aut_lower_bound_center(raag::share(
                         raag::join({raag::complete_graph({"s"}),
                                     raag::edgeless_graph({"a", "b"})}))));

  for (std::size_t d = 2; d <= 4; ++d) {
    std::vector<std::size_t> sizes;
    for (std::size_t i = 2; i <= d + 1; ++i)
      sizes.push_back(i);
    EXPECT_EQ(BigInt(1) << (d - 1), raag::out_aut_lower_bound_center(
                                      raag::share(raag::join_complete(1, sizes))));
  }

  EXPECT_THROW(raag::out_aut_lower_bound_center(raag::share(raag::frucht())),
               raag::precondition_error);
  EXPECT_THROW(raag::out_aut_lower_bound_center(raag::share(
                 raag::complete_graph({"a", "b", "c"}))),
               raag::precondition_error);
}

TEST(DecompositionTest, SplitNormalityAndIota)
{
  auto d = decompose(2, k2_k3());
  EXPECT_TRUE(raag::verify_split_normality(d).passed);
  EXPECT_TRUE(raag::iota_noncentrality_check(d).passed);

  auto pendant = decompose(1, raag::path_graph({"a", "b", "c", "d"}));
  EXPECT_TRUE(raag::verify_split_normality(pendant).passed);

  auto small = decompose(1, raag::edgeless_graph({"a", "b"}));
  EXPECT_TRUE(raag::iota_noncentrality_check(small).passed);

  auto none = raag::join_decomposition(raag::share(raag::frucht()));
  EXPECT_TRUE(raag::verify_split_normality(none).skipped);
  EXPECT_TRUE(raag::iota_noncentrality_check(none).skipped);
}
