#include "tuttekit/kirchhoff.hpp"

#include <stdexcept>

namespace tuttekit {

namespace {

MultiAffinePoly edge_var(const Edge& e) {
  if (e.w.is_exact()) return MultiAffinePoly(e.w.value);
  return MultiAffinePoly::var(e.id);
}

}  // namespace

std::vector<std::vector<int>> directed_incidence(const Multigraph& g) {
  std::vector<std::vector<int>> b(static_cast<size_t>(g.num_vertices()),
                                  std::vector<int>(static_cast<size_t>(g.num_edges()), 0));
  int col = 0;
  for (auto& e : g.edges()) {
    if (!e.is_loop()) {
      b[static_cast<size_t>(e.u)][static_cast<size_t>(col)] = 1;
      b[static_cast<size_t>(e.v)][static_cast<size_t>(col)] = -1;
    }
    ++col;
  }
  return b;
}

Matrix<MultiAffinePoly> weighted_laplacian(const Multigraph& g) {
  size_t n = static_cast<size_t>(g.num_vertices());
  Matrix<MultiAffinePoly> l(n, std::vector<MultiAffinePoly>(n));
  for (auto& e : g.edges()) {
    if (e.is_loop()) continue;
    MultiAffinePoly x = edge_var(e);
    size_t u = static_cast<size_t>(e.u), v = static_cast<size_t>(e.v);
    l[u][u] = l[u][u] + x;
    l[v][v] = l[v][v] + x;
    l[u][v] = l[u][v] - x;
    l[v][u] = l[v][u] - x;
  }
  return l;
}

MultiAffinePoly matrix_tree(const Multigraph& g, int root) {
  return rooted_forest_minor(g, {root});
}

MultiAffinePoly rooted_forest_minor(const Multigraph& g, const std::vector<int>& roots) {
  int n = g.num_vertices();
  std::vector<bool> drop(static_cast<size_t>(n), false);
  for (int r : roots) {
    if (r < 0 || r >= n) throw std::invalid_argument("rooted_forest_minor: root out of range");
    if (drop[static_cast<size_t>(r)])
      throw std::invalid_argument("rooted_forest_minor: repeated root");
    drop[static_cast<size_t>(r)] = true;
  }
  Matrix<MultiAffinePoly> l = weighted_laplacian(g);
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (!drop[static_cast<size_t>(i)]) keep.push_back(i);
  size_t k = keep.size();
  if (k == 0) return MultiAffinePoly(Rational(1));
  Matrix<MultiAffinePoly> minor(k, std::vector<MultiAffinePoly>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      minor[i][j] = l[static_cast<size_t>(keep[i])][static_cast<size_t>(keep[j])];
  return exact_determinant(minor);
}

MultiAffinePoly rooted_forest_enumeration(const Multigraph& g, const std::vector<int>& roots) {
  int m = g.num_edges();
  if (m > 24) throw CapExceededError("rooted_forest_enumeration capped at 24 edges");
  int n = g.num_vertices();
  std::vector<bool> is_root(static_cast<size_t>(n), false);
  for (int r : roots) is_root[static_cast<size_t>(r)] = true;
  const auto& es = g.edges();
  std::vector<int> sym;
  for (auto& e : es)
    if (!e.w.is_exact()) sym.push_back(e.id);
  MultiAffinePoly out(sym);
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    // cycle-free and exactly one root per tree
    Dsu dsu(n);
    bool ok = true;
    Rational coeff(1);
    uint32_t sym_mask = 0;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask & (uint32_t(1) << i))) continue;
      if (!dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) ok = false;
      if (es[static_cast<size_t>(i)].w.is_exact()) coeff *= es[static_cast<size_t>(i)].w.value;
      else {
        auto it = std::lower_bound(sym.begin(), sym.end(), es[static_cast<size_t>(i)].id);
        sym_mask |= uint32_t(1) << (it - sym.begin());
      }
    }
    if (!ok || coeff.is_zero()) continue;
    std::vector<int> root_count(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      if (is_root[static_cast<size_t>(v)]) ++root_count[static_cast<size_t>(dsu.find(v))];
    for (int v = 0; v < n && ok; ++v)
      if (root_count[static_cast<size_t>(dsu.find(v))] != 1) ok = false;
    if (ok) out.add_term(sym_mask, LaurentPoly(coeff));
  }
  return out;
}

PolyFraction effective_conductance(const Multigraph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("effective_conductance: need distinct vertices");
  if (!g.connected()) throw std::invalid_argument("effective_conductance: graph must be connected");
  PolyFraction y;
  y.num = matrix_tree(g, 0);
  std::vector<int> vmap;
  Multigraph merged = g.identified(i, j, vmap);
  y.den = matrix_tree(merged, 0);
  y.reduce_light();
  return y;
}

}  // namespace tuttekit
