#include "tuttekit/linalg.hpp"

#include <algorithm>

namespace tuttekit {

namespace {

template <typename T>
T bareiss(Matrix<T>& a) {
  size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return T(Rational(1));
  int sign = 1;
  T prev(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == T(Rational(0))) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == T(Rational(0))) ++piv;
      if (piv == n) return T(Rational(0));
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return sign < 0 ? T(Rational(0)) - det : det;
}

}  // namespace

Rational exact_determinant(Matrix<Rational> m) { return bareiss(m); }
GaussianRational exact_determinant(Matrix<GaussianRational> m) {
  for (auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix not square");
  if (m.empty()) return GaussianRational(Rational(1));
  // plain elimination; Q(i) is a field so this stays exact
  size_t n = m.size();
  GaussianRational det{Rational(1), Rational(0)};
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return GaussianRational(Rational(0));
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      GaussianRational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

SparsePoly exact_determinant(const Matrix<SparsePoly>& m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n > 8) throw CapExceededError("polynomial determinant capped at size 8");
  if (n == 0) return SparsePoly(Rational(1));
  // dp over column subsets: det of the first popcount(S) rows against columns S
  std::vector<SparsePoly> dp(size_t(1) << n);
  dp[0] = SparsePoly(Rational(1));
  for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
    int row = __builtin_popcount(s) - 1;
    SparsePoly acc;
    int parity = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const SparsePoly& entry = m[row][j];
      if (!entry.is_zero()) {
        SparsePoly contrib = entry * dp[s & ~(1u << j)];
        acc = ((row + parity) % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++parity;
    }
    dp[s] = std::move(acc);
  }
  return dp[(size_t(1) << n) - 1];
}

MultiAffinePoly exact_determinant(const Matrix<MultiAffinePoly>& m) {
  Matrix<SparsePoly> s(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    s[i].reserve(m[i].size());
    for (auto& e : m[i]) s[i].push_back(e.to_sparse());
  }
  return sparse_to_multiaffine(exact_determinant(s));
}

namespace {

template <typename T>
T ryser(const Matrix<T>& m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("permanent: matrix not square");
  if (n > 10) throw CapExceededError("permanent capped at size 10");
  if (n == 0) return T(Rational(1));
  T total(Rational(0));
  for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
    T prod(Rational(1));
    for (size_t i = 0; i < n; ++i) {
      T rowsum(Rational(0));
      for (size_t j = 0; j < n; ++j)
        if (s & (1u << j)) rowsum += m[i][j];
      prod *= rowsum;
    }
    bool neg = ((n - __builtin_popcount(s)) % 2) != 0;
    if (neg) total -= prod;
    else total += prod;
  }
  return total;
}

}  // namespace

Rational exact_permanent(const Matrix<Rational>& m) {
  // Rational lacks -=* with the template shape above? it has; reuse
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("permanent: matrix not square");
  if (n > 10) throw CapExceededError("permanent capped at size 10");
  if (n == 0) return Rational(1);
  Rational total(0);
  for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
    Rational prod(1);
    for (size_t i = 0; i < n; ++i) {
      Rational rowsum(0);
      for (size_t j = 0; j < n; ++j)
        if (s & (1u << j)) rowsum += m[i][j];
      prod *= rowsum;
    }
    if ((n - __builtin_popcount(s)) % 2) total -= prod;
    else total += prod;
  }
  return total;
}

GaussianRational exact_permanent(const Matrix<GaussianRational>& m) { return ryser(m); }

int exact_rank(Matrix<Rational> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

MultiAffinePoly sparse_to_multiaffine(const SparsePoly& p) {
  std::vector<int> universe;
  for (int v : p.variables())
    if (v != kVarQ) universe.push_back(v);
  MultiAffinePoly out(universe);
  for (auto& [m, c] : p.terms()) {
    uint32_t mask = 0;
    int qexp = 0;
    for (auto& [v, e] : m.factors) {
      if (v == kVarQ) {
        qexp = e;
        continue;
      }
      if (e != 1)
        throw NonMultiaffineError("sparse_to_multiaffine: exponent > 1 on " + default_var_name(v));
      auto it = std::lower_bound(out.universe().begin(), out.universe().end(), v);
      mask |= 1u << (it - out.universe().begin());
    }
    out.add_term(mask, LaurentPoly::var_power(qexp, c));
  }
  return out;
}

}  // namespace tuttekit
