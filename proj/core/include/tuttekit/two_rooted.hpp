#pragma once

#include <map>

#include "tuttekit/graph.hpp"
#include "tuttekit/multiaffine.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

// Z_G = q^2 A + q B where A collects subsets leaving the roots in distinct
// components and B the rest, each with its root-component q factors removed.
struct TwoRootedDecomposition {
  MultiAffinePoly a, b;
};

TwoRootedDecomposition decompose_two_rooted(const Multigraph& g, int x, int y,
                                            const SolveOptions& opts = SolveOptions{});

// v_eff = B/A: the weight a single edge between the roots would need so that
// attaching the rest of any network reproduces Z up to the factor A.
PolyFraction effective_coupling(const Multigraph& g, int x, int y,
                                const SolveOptions& opts = SolveOptions{});

// t_eff = v_eff / (q + v_eff) = B / (qA + B)
PolyFraction transmissivity(const Multigraph& g, int x, int y,
                            const SolveOptions& opts = SolveOptions{});

// BFS edge distance, -1 if x and y are in different components
int unweighted_distance(const Multigraph& g, int x, int y);

struct TwoRootedPiece {
  Multigraph h;
  int x = 0, y = 0;
};

// Replace each listed edge e=(u,v) of g by a copy of the piece graph with
// root x glued to u and root y glued to v. Replaced pieces get fresh edge
// ids; out_edge_map (if given) records piece-edge id -> glued-edge id per
// replaced edge.
Multigraph substitute_edges(const Multigraph& g, const std::map<int, TwoRootedPiece>& pieces,
                            std::map<int, std::map<int, int>>* out_edge_map = nullptr);

// theta graph: `strands` internally disjoint paths of `len` edges between two
// roots, every edge weighted v. With a = ((q+v)^len - v^len)/q and b = v^len,
// Z = q(q-1) a^strands + q (a+b)^strands.
LaurentPoly theta_z_closed_form(int strands, int len, const Rational& v);

}  // namespace tuttekit
