#include "tuttekit/two_rooted.hpp"

#include <deque>
#include <stdexcept>

namespace tuttekit {

TwoRootedDecomposition decompose_two_rooted(const Multigraph& g, int x, int y,
                                            const SolveOptions& opts) {
  if (x == y || x < 0 || y < 0 || x >= g.num_vertices() || y >= g.num_vertices())
    throw std::invalid_argument("decompose_two_rooted: bad roots");
  MultiAffinePoly zg = graph_z(g, opts);
  std::vector<int> vmap;
  MultiAffinePoly zxy = graph_z(g.identified(x, y, vmap), opts);
  // q(q-1) A = Z_G - Z_{G/xy},  q(q-1) B = q Z_{G/xy} - Z_G
  LaurentPoly qq1 = LaurentPoly::var_power(2) - LaurentPoly::var_power(1);
  TwoRootedDecomposition d;
  d.a = (zg - zxy).divide_coeffs_exact(qq1);
  d.b = (zxy.scaled(LaurentPoly::var_power(1)) - zg).divide_coeffs_exact(qq1);
  return d;
}

PolyFraction effective_coupling(const Multigraph& g, int x, int y, const SolveOptions& opts) {
  TwoRootedDecomposition d = decompose_two_rooted(g, x, y, opts);
  PolyFraction f;
  f.num = d.b;
  f.den = d.a;
  return f;
}

PolyFraction transmissivity(const Multigraph& g, int x, int y, const SolveOptions& opts) {
  TwoRootedDecomposition d = decompose_two_rooted(g, x, y, opts);
  PolyFraction f;
  f.num = d.b;
  f.den = d.a.scaled(LaurentPoly::var_power(1)) + d.b;
  return f;
}

int unweighted_distance(const Multigraph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.num_vertices() || y >= g.num_vertices())
    throw std::invalid_argument("unweighted_distance: vertex out of range");
  std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
  dist[static_cast<size_t>(x)] = 0;
  std::deque<int> queue{x};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == y) return dist[static_cast<size_t>(v)];
    for (auto& e : g.edges()) {
      if (e.is_loop()) continue;
      if (e.u != v && e.v != v) continue;
      int w = e.other(v);
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

Multigraph substitute_edges(const Multigraph& g, const std::map<int, TwoRootedPiece>& pieces,
                            std::map<int, std::map<int, int>>* out_edge_map) {
  Multigraph out(g.num_vertices());
  for (auto& e : g.edges()) {
    if (pieces.count(e.id)) continue;
    out.add_edge_with_id(e.id, e.u, e.v, e.w);
  }
  for (auto& [eid, piece] : pieces) {
    const Edge& e = g.edge(eid);
    const Multigraph& h = piece.h;
    if (piece.x == piece.y || piece.x < 0 || piece.y < 0 || piece.x >= h.num_vertices() ||
        piece.y >= h.num_vertices())
      throw std::invalid_argument("substitute_edges: bad piece roots");
    // piece root x lands on e.u, root y on e.v; internal vertices are appended
    std::vector<int> vmap(static_cast<size_t>(h.num_vertices()), -1);
    vmap[static_cast<size_t>(piece.x)] = e.u;
    vmap[static_cast<size_t>(piece.y)] = e.v;
    for (int v = 0; v < h.num_vertices(); ++v)
      if (vmap[static_cast<size_t>(v)] == -1) vmap[static_cast<size_t>(v)] = out.add_vertex();
    for (auto& he : h.edges()) {
      int nid = out.add_edge(vmap[static_cast<size_t>(he.u)], vmap[static_cast<size_t>(he.v)], he.w);
      if (out_edge_map) (*out_edge_map)[eid][he.id] = nid;
    }
  }
  return out;
}

LaurentPoly theta_z_closed_form(int strands, int len, const Rational& v) {
  if (strands < 1 || len < 1) throw std::invalid_argument("theta_z_closed_form: bad shape");
  LaurentPoly vq = LaurentPoly::var_power(1) + LaurentPoly(v);  // q + v
  LaurentPoly vs = LaurentPoly(v).pow(static_cast<unsigned>(len));
  LaurentPoly a = (vq.pow(static_cast<unsigned>(len)) - vs).shifted(-1);
  LaurentPoly b = vs;
  LaurentPoly qq1 = LaurentPoly::var_power(2) - LaurentPoly::var_power(1);
  return qq1 * a.pow(static_cast<unsigned>(strands)) +
         LaurentPoly::var_power(1) * (a + b).pow(static_cast<unsigned>(strands));
}

}  // namespace tuttekit
