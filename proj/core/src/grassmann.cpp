#include "tuttekit/grassmann.hpp"

#include <bit>
#include <stdexcept>

namespace tuttekit {

GrassmannElement::GrassmannElement(int pairs) : n_(pairs) {
  if (pairs < 0 || pairs > 16) throw CapExceededError("GrassmannElement capped at 16 pairs");
}

void GrassmannElement::add_term(uint64_t mask, const SparsePoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GrassmannElement GrassmannElement::scalar(int pairs, SparsePoly c) {
  GrassmannElement g(pairs);
  g.add_term(0, c);
  return g;
}

GrassmannElement GrassmannElement::psi(int pairs, int i) {
  GrassmannElement g(pairs);
  g.add_term(uint64_t(1) << (2 * i), SparsePoly(Rational(1)));
  return g;
}

GrassmannElement GrassmannElement::psi_bar(int pairs, int i) {
  GrassmannElement g(pairs);
  g.add_term(uint64_t(1) << (2 * i + 1), SparsePoly(Rational(1)));
  return g;
}

SparsePoly GrassmannElement::coeff(uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? SparsePoly() : it->second;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c.scaled(Rational(-1)));
  return r;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  GrassmannElement r(n_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;
      // sorting the concatenation: each generator of mb moves past the
      // generators of ma above it
      int inversions = 0;
      uint64_t rest = mb;
      while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(ma >> (j + 1));
      }
      SparsePoly c = ca * cb;
      if (inversions & 1) c = c.scaled(Rational(-1));
      r.add_term(ma | mb, c);
    }
  return r;
}

GrassmannElement GrassmannElement::scaled(const SparsePoly& c) const {
  GrassmannElement r(n_);
  for (auto& [m, co] : terms_) r.add_term(m, co * c);
  return r;
}

bool GrassmannElement::is_even() const {
  for (auto& [m, c] : terms_)
    if (std::popcount(m) % 2 != 0) return false;
  return true;
}

GrassmannElement GrassmannElement::exp_even() const {
  if (!is_even()) throw std::domain_error("exp_even: element has odd terms");
  if (terms_.count(0)) throw std::domain_error("exp_even: element has a scalar part");
  GrassmannElement res = scalar(n_, SparsePoly(Rational(1)));
  GrassmannElement power = scalar(n_, SparsePoly(Rational(1)));
  Rational factorial(1);
  for (int k = 1; k <= n_; ++k) {
    power = power * (*this);
    if (power.is_zero()) break;
    factorial *= Rational(k);
    res = res + power.scaled(SparsePoly(Rational(1) / factorial));
  }
  return res;
}

SparsePoly GrassmannElement::integrate() const {
  uint64_t top = n_ == 0 ? 0 : ((uint64_t(1) << (2 * n_)) - 1);
  SparsePoly c = coeff(top);
  return (n_ % 2 == 1) ? c.scaled(Rational(-1)) : c;
}

GrassmannElement grassmann_bilinear(const Matrix<SparsePoly>& a) {
  size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("grassmann_bilinear: square matrix required");
  GrassmannElement acc(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a[i][j].is_zero()) continue;
      acc = acc + (GrassmannElement::psi_bar(static_cast<int>(n), static_cast<int>(i)) *
                   GrassmannElement::psi(static_cast<int>(n), static_cast<int>(j)))
                      .scaled(a[i][j]);
    }
  return acc;
}

SparsePoly grassmann_gaussian_determinant(const Matrix<SparsePoly>& a) {
  return grassmann_bilinear(a).exp_even().integrate();
}

namespace {

SparsePoly edge_var_sparse(const Edge& e) {
  if (e.w.is_exact()) return SparsePoly(e.w.value);
  return SparsePoly::var(e.id);
}

Matrix<SparsePoly> laplacian_sparse(const Multigraph& g) {
  size_t n = static_cast<size_t>(g.num_vertices());
  Matrix<SparsePoly> l(n, std::vector<SparsePoly>(n));
  for (auto& e : g.edges()) {
    if (e.is_loop()) continue;
    SparsePoly x = edge_var_sparse(e);
    size_t u = static_cast<size_t>(e.u), v = static_cast<size_t>(e.v);
    l[u][u] += x;
    l[v][v] += x;
    l[u][v] -= x;
    l[v][u] -= x;
  }
  return l;
}

GrassmannElement pair_density(int n, int i) {
  return GrassmannElement::psi_bar(n, i) * GrassmannElement::psi(n, i);
}

}  // namespace

SparsePoly grassmann_forest_lhs(const Multigraph& g) {
  int n = g.num_vertices();
  if (n > 8) throw CapExceededError("grassmann_forest_lhs capped at 8 vertices");
  Matrix<SparsePoly> l = laplacian_sparse(g);
  SparsePoly t = SparsePoly::var(kVarT);
  GrassmannElement body = grassmann_bilinear(l);
  for (int i = 0; i < n; ++i) body = body + pair_density(n, i).scaled(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparsePoly& lij = l[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (lij.is_zero()) continue;
      body = body + (pair_density(n, i) * pair_density(n, j))
                        .scaled(lij * t.scaled(Rational(1, 2)));
    }
  return body.exp_even().integrate();
}

SparsePoly grassmann_forest_lhs_edge_form(const Multigraph& g) {
  int n = g.num_vertices();
  if (n > 8) throw CapExceededError("grassmann_forest_lhs_edge_form capped at 8 vertices");
  Matrix<SparsePoly> l = laplacian_sparse(g);
  SparsePoly t = SparsePoly::var(kVarT);
  SparsePoly u = SparsePoly::var(kVarU);
  GrassmannElement body = grassmann_bilinear(l);
  for (int i = 0; i < n; ++i) body = body + pair_density(n, i).scaled(t);
  for (auto& e : g.edges()) {
    if (e.is_loop()) continue;
    body = body + (pair_density(n, e.u) * pair_density(n, e.v)).scaled(u * edge_var_sparse(e));
  }
  return body.exp_even().integrate();
}

SparsePoly forest_poly_enumeration(const Multigraph& g) {
  int m = g.num_edges();
  if (m > 24) throw CapExceededError("forest_poly_enumeration capped at 24 edges");
  int n = g.num_vertices();
  const auto& es = g.edges();
  SparsePoly out;
  SparsePoly t = SparsePoly::var(kVarT);
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Dsu dsu(n);
    bool forest = true;
    SparsePoly term(Rational(1));
    for (int i = 0; i < m && forest; ++i) {
      if (!(mask & (uint32_t(1) << i))) continue;
      if (!dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) forest = false;
      term = term * edge_var_sparse(es[static_cast<size_t>(i)]);
    }
    if (!forest) continue;
    int k = n - std::popcount(mask);
    out += term * t.pow(static_cast<unsigned>(k));
  }
  return out;
}

namespace {

void validate_mark(const Multigraph& g, const SubgraphMark& mark) {
  if (mark.vertices == 0) throw std::invalid_argument("mark needs a nonempty vertex set");
  int n = g.num_vertices();
  int m = g.num_edges();
  if (m > 20) throw CapExceededError("subgraph marks capped at 20 edges");
  if ((uint64_t(mark.vertices) >> n) || (uint64_t(mark.edges) >> m))
    throw std::invalid_argument("mark out of range");
  // edges must live inside the vertex set, and the subgraph must be connected
  Dsu dsu(n);
  const auto& es = g.edges();
  for (int i = 0; i < m; ++i) {
    if (!(mark.edges & (uint32_t(1) << i))) continue;
    const Edge& e = es[static_cast<size_t>(i)];
    if (!(mark.vertices & (uint32_t(1) << e.u)) || !(mark.vertices & (uint32_t(1) << e.v)))
      throw std::invalid_argument("mark edge leaves the vertex set");
    dsu.unite(e.u, e.v);
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (!(mark.vertices & (uint32_t(1) << v))) continue;
    if (root == -1) root = dsu.find(v);
    else if (dsu.find(v) != root) throw std::invalid_argument("mark subgraph is disconnected");
  }
}

int cyclomatic_of(const Multigraph& g, uint32_t edge_mask, uint32_t vertex_mask) {
  Dsu dsu(g.num_vertices());
  int k = std::popcount(vertex_mask);
  int cnt = 0;
  const auto& es = g.edges();
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!(edge_mask & (uint32_t(1) << i))) continue;
    ++cnt;
    if (dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) --k;
  }
  return cnt - std::popcount(vertex_mask) + k;
}

}  // namespace

SparsePoly grassmann_marked_integral(const Multigraph& g, const std::vector<SubgraphMark>& marks) {
  int n = g.num_vertices();
  if (n > 5) throw CapExceededError("grassmann_marked_integral capped at 5 vertices");
  Matrix<SparsePoly> l = laplacian_sparse(g);
  GrassmannElement body = grassmann_bilinear(l);
  const auto& es = g.edges();
  for (auto& mark : marks) {
    validate_mark(g, mark);
    SparsePoly w = mark.t;
    for (int i = 0; i < g.num_edges(); ++i)
      if (mark.edges & (uint32_t(1) << i)) w = w * edge_var_sparse(es[static_cast<size_t>(i)]);
    GrassmannElement q = GrassmannElement::scalar(n, SparsePoly(Rational(1)));
    for (int v = 0; v < n; ++v)
      if (mark.vertices & (uint32_t(1) << v)) q = q * pair_density(n, v);
    body = body + q.scaled(w);
  }
  return body.exp_even().integrate();
}

SparsePoly marked_subgraph_sum(const Multigraph& g, const std::vector<SubgraphMark>& marks) {
  int n = g.num_vertices();
  int m = g.num_edges();
  if (n > 5 || m > 20) throw CapExceededError("marked_subgraph_sum capped at 5 vertices");
  for (auto& mark : marks) validate_mark(g, mark);
  const auto& es = g.edges();
  SparsePoly out;
  for (uint32_t h = 0; h < (uint32_t(1) << m); ++h) {
    // split the spanning subgraph into components
    Dsu dsu(n);
    for (int i = 0; i < m; ++i)
      if (h & (uint32_t(1) << i)) dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v);
    std::map<int, std::pair<uint32_t, uint32_t>> comps;  // root -> (vertices, edges)
    for (int v = 0; v < n; ++v) comps[dsu.find(v)].first |= uint32_t(1) << v;
    for (int i = 0; i < m; ++i)
      if (h & (uint32_t(1) << i)) comps[dsu.find(es[static_cast<size_t>(i)].u)].second |= uint32_t(1) << i;
    SparsePoly weight(Rational(1));
    bool zero = false;
    for (auto& [root, comp] : comps) {
      SparsePoly w;  // W(H_i)
      int c_comp = cyclomatic_of(g, comp.second, comp.first);
      for (auto& mark : marks) {
        if ((mark.vertices & comp.first) != mark.vertices) continue;
        if ((mark.edges & comp.second) != mark.edges) continue;
        if (cyclomatic_of(g, mark.edges, mark.vertices) != c_comp) continue;
        w += mark.t;
      }
      if (w.is_zero()) {
        zero = true;
        break;
      }
      weight = weight * w;
    }
    if (zero) continue;
    for (int i = 0; i < m; ++i)
      if (h & (uint32_t(1) << i)) weight = weight * edge_var_sparse(es[static_cast<size_t>(i)]);
    out += weight;
  }
  return out;
}

}  // namespace tuttekit
