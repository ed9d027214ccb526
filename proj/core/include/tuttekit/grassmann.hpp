#pragma once

#include <cstdint>
#include <map>

#include "tuttekit/graph.hpp"
#include "tuttekit/linalg.hpp"
#include "tuttekit/sparse_poly.hpp"

namespace tuttekit {

// Element of the exterior algebra on generator pairs psi_i, psibar_i
// (i = 0..n-1), with commutative polynomial coefficients. Generator order is
// psi_0 < psibar_0 < psi_1 < psibar_1 < ...; monomial masks use bit 2i for
// psi_i and bit 2i+1 for psibar_i, and every stored monomial is in ascending
// generator order.
class GrassmannElement {
 public:
  explicit GrassmannElement(int pairs);
  static GrassmannElement scalar(int pairs, SparsePoly c);
  static GrassmannElement psi(int pairs, int i);
  static GrassmannElement psi_bar(int pairs, int i);

  int pairs() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  SparsePoly coeff(uint64_t mask) const;
  const std::map<uint64_t, SparsePoly>& terms() const { return terms_; }

  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator*(const GrassmannElement& o) const;
  GrassmannElement scaled(const SparsePoly& c) const;

  // every monomial has even degree
  bool is_even() const;
  // exp of an even element with no scalar part, exact by nilpotency
  GrassmannElement exp_even() const;

  // integral against D(psi,psibar) = prod_i dpsi_i dpsibar_i: the coefficient
  // of psi_0 psibar_0 ... psi_{n-1} psibar_{n-1} carries sign (-1)^n
  SparsePoly integrate() const;

 private:
  int n_;
  std::map<uint64_t, SparsePoly> terms_;  // no zero coefficients
  void add_term(uint64_t mask, const SparsePoly& c);
};

// body psibar A psi as a Grassmann element (entries indexed [i][j] mean
// psibar_i A_ij psi_j)
GrassmannElement grassmann_bilinear(const Matrix<SparsePoly>& a);

// integral of exp(psibar A psi) = det A, provided for cross-checks
SparsePoly grassmann_gaussian_determinant(const Matrix<SparsePoly>& a);

// integral of exp[psibar L psi + t sum_i psibar_i psi_i
//                 + (t/2) sum_{ij} psibar_i psi_i L_ij psibar_j psi_j]
// with t symbolic; equals t^{|V|} F_G(w/t) where F_G sums spanning forests.
// Edge weights become their variables; |V| <= 8.
SparsePoly grassmann_forest_lhs(const Multigraph& g);

// same integral with the quartic written per edge as
// u sum_{e=ij} w_e psibar_i psi_i psibar_j psi_j, u symbolic
SparsePoly grassmann_forest_lhs_edge_form(const Multigraph& g);

// spanning-forest generating polynomial sum_F (prod t per component)
// (prod w_e over F) as a SparsePoly in t and edge vars, by enumeration
SparsePoly forest_poly_enumeration(const Multigraph& g);

// per-component marks: a connected subgraph (vertex set + edge set) with its
// mark variable coefficient
struct SubgraphMark {
  uint32_t vertices = 0;
  uint32_t edges = 0;        // mask over edge positions
  SparsePoly t;              // the mark weight t_Gamma
};

// integral of exp[psibar L psi + sum_Gamma t_Gamma Q_Gamma] where
// Q_Gamma = (prod_{e in Gamma} w_e)(prod_{i in V_Gamma} psibar_i psi_i)
SparsePoly grassmann_marked_integral(const Multigraph& g, const std::vector<SubgraphMark>& marks);

// the matching combinatorial side: sum over spanning subgraphs H of
// prod over components H_i of W(H_i) times prod of edge weights, where
// W(H_i) = sum of t_Gamma over marks Gamma contained in H_i such that H_i has
// no cycle outside Gamma; |V| <= 5
SparsePoly marked_subgraph_sum(const Multigraph& g, const std::vector<SubgraphMark>& marks);

}  // namespace tuttekit
