// Builds join(K2, K2 + K3), lists its lateral transvections and shows how
// conjugating one of them by a transvection inside the centre mixes the
// Δ-blocks.

#include <iostream>

#include "raag/automorphism.hpp"
#include "raag/decomposition.hpp"
#include "raag/families.hpp"

int main()
{
  using namespace raag;

  auto graph = share(join_complete(2, {2, 3}));
  auto const &g = *graph;
  auto d = join_decomposition(graph);

  auto lattice = lateral_transvections(d);
  std::cout << "k = " << d.k << ", |Delta| = " << d.delta_vertices.size()
            << ", rank = " << lattice.rank() << '\n';

  for (auto const &tau : lattice.basis)
    std::cout << "  " << describe(g, tau) << ": "
              << describe_action(ls_to_automorphism(graph, tau)) << '\n';

  auto s1 = g.index_of("s1"), s2 = g.index_of("s2"), a = g.index_of("x1_1");
  auto tau = ls_to_automorphism(graph, Transvection{s1, a});
  auto lambda = ls_to_automorphism(graph, Transvection{s2, s1});

  std::cout << describe(g, Transvection{s2, s1}) << " . "
            << describe(g, Transvection{s1, a}) << " = "
            << describe_action(conjugate_automorphism(lambda, tau)) << '\n';

  auto sc = sign_classes(d);
  std::cout << "sign classes: " << sc.m << ", |C(Q)| = "
            << centralizer_order(d) << ", |Out(Aut)| >= "
            << out_aut_lower_bound_center(graph) << '\n';
}
