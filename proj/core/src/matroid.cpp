#include "tuttekit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace tuttekit {

struct RankOracle::Impl {
  int n = 0;
  std::vector<int> labels;
  std::vector<EdgeWeight> weights;
  std::string kind;
  std::function<int(uint32_t)> raw;
  mutable std::mutex mu;
  mutable std::unordered_map<uint32_t, int> memo;
};

RankOracle RankOracle::make(int n, std::vector<int> labels, std::vector<EdgeWeight> weights,
                            std::string kind, std::function<int(uint32_t)> raw) {
  if (n > 24) throw CapExceededError("RankOracle: ground set capped at 24 elements");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->labels = std::move(labels);
  impl->weights = std::move(weights);
  impl->kind = std::move(kind);
  impl->raw = std::move(raw);
  return RankOracle(std::move(impl));
}

int RankOracle::size() const { return impl_->n; }
const std::vector<int>& RankOracle::labels() const { return impl_->labels; }
const std::vector<EdgeWeight>& RankOracle::weights() const { return impl_->weights; }
const std::string& RankOracle::kind() const { return impl_->kind; }

int RankOracle::position_of(int label) const {
  for (int i = 0; i < impl_->n; ++i)
    if (impl_->labels[static_cast<size_t>(i)] == label) return i;
  throw UnknownEdgeError("RankOracle: unknown element label " + std::to_string(label));
}

int RankOracle::rank(uint32_t subset) const {
  if (subset & ~all_mask()) throw std::invalid_argument("RankOracle::rank: mask out of range");
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    auto it = impl_->memo.find(subset);
    if (it != impl_->memo.end()) return it->second;
  }
  int r = impl_->raw(subset);
  std::lock_guard<std::mutex> lk(impl_->mu);
  impl_->memo.emplace(subset, r);
  return r;
}

bool RankOracle::is_loop(int label) const {
  return rank(uint32_t(1) << position_of(label)) == 0;
}

bool RankOracle::is_coloop(int label) const {
  uint32_t rest = all_mask() & ~(uint32_t(1) << position_of(label));
  return rank(rest) == full_rank() - 1;
}

namespace {

std::vector<int> default_labels(int n) {
  std::vector<int> l(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) l[static_cast<size_t>(i)] = i;
  return l;
}

std::vector<EdgeWeight> default_weights(int n) {
  return std::vector<EdgeWeight>(static_cast<size_t>(n), EdgeWeight::symbol());
}

}  // namespace

RankOracle RankOracle::uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  return make(n, default_labels(n), default_weights(n),
              "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
              [r](uint32_t a) { return std::min(r, std::popcount(a)); });
}

RankOracle RankOracle::graphic(const Multigraph& g) {
  std::vector<int> labels;
  std::vector<EdgeWeight> weights;
  std::vector<std::pair<int, int>> ends;
  for (auto& e : g.edges()) {
    labels.push_back(e.id);
    weights.push_back(e.w);
    ends.push_back({e.u, e.v});
  }
  int nv = g.num_vertices();
  int m = g.num_edges();
  return make(m, std::move(labels), std::move(weights), "graphic",
              [nv, ends](uint32_t a) {
                Dsu dsu(nv);
                int k = nv;
                for (size_t i = 0; i < ends.size(); ++i)
                  if (a & (uint32_t(1) << i))
                    if (dsu.unite(ends[i].first, ends[i].second)) --k;
                return nv - k;
              });
}

RankOracle RankOracle::linear_rational(const Matrix<Rational>& columns) {
  size_t rows = columns.size();
  size_t m = rows == 0 ? 0 : columns[0].size();
  for (auto& row : columns)
    if (row.size() != m) throw std::invalid_argument("linear_rational: ragged matrix");
  return make(static_cast<int>(m), default_labels(static_cast<int>(m)),
              default_weights(static_cast<int>(m)), "linear-Q",
              [columns, rows, m](uint32_t a) {
                std::vector<size_t> pick;
                for (size_t j = 0; j < m; ++j)
                  if (a & (uint32_t(1) << j)) pick.push_back(j);
                if (pick.empty()) return 0;
                Matrix<Rational> sub(rows, std::vector<Rational>(pick.size()));
                for (size_t i = 0; i < rows; ++i)
                  for (size_t j = 0; j < pick.size(); ++j)
                    sub[i][j] = columns[i][pick[j]];
                return exact_rank(sub);
              });
}

RankOracle RankOracle::linear_gf2(const std::vector<uint64_t>& columns, int num_rows) {
  if (num_rows < 0 || num_rows > 64) throw std::invalid_argument("linear_gf2: bad row count");
  int m = static_cast<int>(columns.size());
  return make(m, default_labels(m), default_weights(m), "linear-GF2",
              [columns](uint32_t a) {
                std::vector<uint64_t> basis;
                for (size_t j = 0; j < columns.size(); ++j) {
                  if (!(a & (uint32_t(1) << j))) continue;
                  uint64_t v = columns[j];
                  for (uint64_t b : basis) v = std::min(v, v ^ b);
                  if (v) basis.push_back(v);
                }
                return static_cast<int>(basis.size());
              });
}

RankOracle RankOracle::from_bases(int ground_size, const std::vector<uint32_t>& bases) {
  if (bases.empty()) throw std::invalid_argument("from_bases: empty family");
  return make(ground_size, default_labels(ground_size), default_weights(ground_size), "bases",
              [bases](uint32_t a) {
                int best = 0;
                for (uint32_t b : bases) best = std::max(best, std::popcount(a & b));
                return best;
              });
}

RankOracle RankOracle::from_table(int ground_size, std::vector<int> table) {
  if (ground_size > 20) throw CapExceededError("from_table: ground set capped at 20 elements");
  if (table.size() != (size_t(1) << ground_size))
    throw std::invalid_argument("from_table: table must have 2^n entries");
  return make(ground_size, default_labels(ground_size), default_weights(ground_size), "table",
              [table](uint32_t a) { return table[a]; });
}

RankOracle RankOracle::dual() const {
  RankOracle self = *this;
  uint32_t all = all_mask();
  int fr = full_rank();
  return make(size(), labels(), weights(), "dual(" + kind() + ")",
              [self, all, fr](uint32_t a) {
                return std::popcount(a) + self.rank(all & ~a) - fr;
              });
}

RankOracle RankOracle::deleted(int label) const {
  int pos = position_of(label);
  RankOracle self = *this;
  std::vector<int> labels = impl_->labels;
  std::vector<EdgeWeight> weights = impl_->weights;
  labels.erase(labels.begin() + pos);
  weights.erase(weights.begin() + pos);
  auto expand = [pos](uint32_t a) {
    uint32_t low = a & ((uint32_t(1) << pos) - 1);
    return low | ((a & ~((uint32_t(1) << pos) - 1)) << 1);
  };
  return make(size() - 1, std::move(labels), std::move(weights), "del(" + kind() + ")",
              [self, expand](uint32_t a) { return self.rank(expand(a)); });
}

RankOracle RankOracle::contracted(int label) const {
  int pos = position_of(label);
  RankOracle self = *this;
  std::vector<int> labels = impl_->labels;
  std::vector<EdgeWeight> weights = impl_->weights;
  labels.erase(labels.begin() + pos);
  weights.erase(weights.begin() + pos);
  uint32_t bit = uint32_t(1) << pos;
  int re = rank(bit);
  auto expand = [pos](uint32_t a) {
    uint32_t low = a & ((uint32_t(1) << pos) - 1);
    return low | ((a & ~((uint32_t(1) << pos) - 1)) << 1);
  };
  return make(size() - 1, std::move(labels), std::move(weights), "con(" + kind() + ")",
              [self, expand, bit, re](uint32_t a) { return self.rank(expand(a) | bit) - re; });
}

RankOracle RankOracle::with_weight(int label, EdgeWeight w) const {
  int pos = position_of(label);
  std::vector<EdgeWeight> weights = impl_->weights;
  weights[static_cast<size_t>(pos)] = std::move(w);
  RankOracle self = *this;
  return make(size(), labels(), std::move(weights), kind(),
              [self](uint32_t a) { return self.rank(a); });
}

namespace {

// shared mask walk: per subset, call f(mask, rank, size, symbolic-var mask, coeff)
template <typename F>
void for_each_subset(const RankOracle& m, const std::vector<int>& sym_vars, F&& f) {
  int n = m.size();
  const auto& ws = m.weights();
  const auto& labels = m.labels();
  for (uint32_t mask = 0; mask <= m.all_mask(); ++mask) {
    Rational coeff(1);
    uint32_t sym_mask = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (uint32_t(1) << i))) continue;
      if (ws[static_cast<size_t>(i)].is_exact()) {
        coeff *= ws[static_cast<size_t>(i)].value;
      } else {
        auto it = std::lower_bound(sym_vars.begin(), sym_vars.end(), labels[static_cast<size_t>(i)]);
        sym_mask |= uint32_t(1) << (it - sym_vars.begin());
      }
    }
    if (coeff.is_zero()) continue;
    f(mask, m.rank(mask), std::popcount(mask), sym_mask, coeff);
    if (mask == m.all_mask()) break;
  }
}

std::vector<int> symbolic_labels(const RankOracle& m) {
  std::vector<int> sym;
  for (int i = 0; i < m.size(); ++i)
    if (!m.weights()[static_cast<size_t>(i)].is_exact())
      sym.push_back(m.labels()[static_cast<size_t>(i)]);
  std::sort(sym.begin(), sym.end());
  return sym;
}

}  // namespace

MultiAffinePoly z_tilde_matroid(const RankOracle& m) {
  if (m.size() > 24) throw CapExceededError("z_tilde_matroid capped at 24 elements");
  std::vector<int> sym = symbolic_labels(m);
  MultiAffinePoly out(sym);
  for_each_subset(m, sym, [&](uint32_t, int r, int, uint32_t sym_mask, const Rational& c) {
    out.add_term(sym_mask, LaurentPoly::var_power(-r, c));
  });
  return out;
}

LaurentPoly matroid_chromatic(const RankOracle& m) {
  if (m.size() > 24) throw CapExceededError("matroid_chromatic capped at 24 elements");
  LaurentPoly out;
  for (uint32_t mask = 0; mask <= m.all_mask(); ++mask) {
    Rational sign(std::popcount(mask) % 2 == 0 ? 1 : -1);
    out += LaurentPoly::var_power(-m.rank(mask), sign);
    if (mask == m.all_mask()) break;
  }
  return out;
}

bool matroid_duality_identity(const RankOracle& m) {
  if (m.size() > 12) throw CapExceededError("matroid_duality_identity capped at 12 elements");
  for (auto& w : m.weights())
    if (w.is_exact())
      throw std::invalid_argument("matroid_duality_identity: elements must be symbolic");
  RankOracle d = m.dual();
  MultiAffinePoly lhs = z_tilde_matroid(d);
  MultiAffinePoly rhs = z_tilde_matroid(m).reciprocal_transform().scaled(
      LaurentPoly::var_power(-d.full_rank()));
  return lhs == rhs;
}

bool matroid_delcon_identity(const RankOracle& m, int label) {
  if (m.size() > 13) throw CapExceededError("matroid_delcon_identity capped at 13 elements");
  MultiAffinePoly z = z_tilde_matroid(m);
  if (m.is_loop(label)) {
    MultiAffinePoly zd = z_tilde_matroid(m.deleted(label)).aligned_to(z.universe());
    return z == zd + MultiAffinePoly::var(label) * zd;
  }
  MultiAffinePoly zd = z_tilde_matroid(m.deleted(label)).aligned_to(z.universe());
  MultiAffinePoly zc = z_tilde_matroid(m.contracted(label));
  MultiAffinePoly ve_over_q = MultiAffinePoly::var(label).scaled(LaurentPoly::var_power(-1));
  return z == zd + ve_over_q * zc;
}

namespace {

MatroidReduction matroid_reduction_build(const RankOracle& m, int l1, int l2, bool series) {
  MatroidReduction red{series ? m.contracted(l2) : m.deleted(l2), series, PolyFraction{}, l1, {}};
  MultiAffinePoly v1 = MultiAffinePoly::var(l1);
  MultiAffinePoly v2 = MultiAffinePoly::var(l2);
  MultiAffinePoly q1(LaurentPoly::var_power(1));
  for (size_t i = 0; i < red.reduced.labels().size(); ++i) {
    int lab = red.reduced.labels()[i];
    const EdgeWeight& w = red.reduced.weights()[i];
    PolyFraction f;
    f.num = w.is_exact() ? MultiAffinePoly(w.value) : MultiAffinePoly::var(lab);
    f.den = MultiAffinePoly(Rational(1));
    red.weights[lab] = f;
  }
  if (series) {
    MultiAffinePoly denom = q1 + v1 + v2;
    red.prefactor.num = denom;
    red.prefactor.den = MultiAffinePoly(LaurentPoly::var_power(1));
    PolyFraction f;
    f.num = v1 * v2;
    f.den = denom;
    red.weights[l1] = f;
  } else {
    red.prefactor.num = MultiAffinePoly(Rational(1));
    red.prefactor.den = MultiAffinePoly(Rational(1));
    PolyFraction f;
    f.num = v1 + v2 + v1 * v2;
    f.den = MultiAffinePoly(Rational(1));
    red.weights[l1] = f;
  }
  return red;
}

}  // namespace

MatroidReduction matroid_series_parallel(const RankOracle& m, int l1, int l2) {
  if (l1 == l2) throw std::invalid_argument("matroid_series_parallel: need distinct elements");
  uint32_t b1 = uint32_t(1) << m.position_of(l1);
  uint32_t b2 = uint32_t(1) << m.position_of(l2);
  bool parallel = m.rank(b1) == 1 && m.rank(b2) == 1 && m.rank(b1 | b2) == 1;
  if (parallel) return matroid_reduction_build(m, l1, l2, false);
  RankOracle d = m.dual();
  bool series = d.rank(b1) == 1 && d.rank(b2) == 1 && d.rank(b1 | b2) == 1;
  bool both_coloops = m.is_coloop(l1) && m.is_coloop(l2);
  if (series || both_coloops) return matroid_reduction_build(m, l1, l2, true);
  throw std::invalid_argument("matroid_series_parallel: pair is neither a circuit nor a cocircuit");
}

PolyFraction z_tilde_fraction_weights(const RankOracle& m,
                                      const std::map<int, PolyFraction>& weights) {
  if (m.size() > 20) throw CapExceededError("z_tilde_fraction_weights capped at 20 elements");
  PolyFraction out;
  out.num = MultiAffinePoly();
  out.den = MultiAffinePoly(Rational(1));
  for (int lab : m.labels()) out.den = out.den * weights.at(lab).den;
  for (uint32_t mask = 0; mask <= m.all_mask(); ++mask) {
    MultiAffinePoly term(LaurentPoly::var_power(-m.rank(mask)));
    for (int i = 0; i < m.size(); ++i) {
      const PolyFraction& w = weights.at(m.labels()[static_cast<size_t>(i)]);
      term = term * ((mask & (uint32_t(1) << i)) ? w.num : w.den);
    }
    out.num += term;
    if (mask == m.all_mask()) break;
  }
  return out;
}

MatroidQZero q_zero_matroid_limits(const RankOracle& m) {
  if (m.size() > 24) throw CapExceededError("q_zero_matroid_limits capped at 24 elements");
  std::vector<int> sym = symbolic_labels(m);
  MatroidQZero out{MultiAffinePoly(sym), MultiAffinePoly(sym), MultiAffinePoly(sym)};
  int fr = m.full_rank();
  for_each_subset(m, sym, [&](uint32_t, int r, int sz, uint32_t sym_mask, const Rational& c) {
    if (r == fr) out.s.add_term(sym_mask, LaurentPoly(c));
    if (r == sz) out.i.add_term(sym_mask, LaurentPoly(c));
    if (r == fr && r == sz) out.b.add_term(sym_mask, LaurentPoly(c));
  });
  return out;
}

MultiAffinePoly matroid_basis_poly(const RankOracle& m) { return q_zero_matroid_limits(m).b; }

bool is_matroid_basis_family(const SetSystem& s) {
  if (s.sets.empty()) return false;
  int card = std::popcount(s.sets.front());
  for (uint32_t b : s.sets)
    if (std::popcount(b) != card) return false;
  auto contains = [&](uint32_t b) {
    return std::find(s.sets.begin(), s.sets.end(), b) != s.sets.end();
  };
  for (uint32_t b1 : s.sets)
    for (uint32_t b2 : s.sets) {
      uint32_t only1 = b1 & ~b2;
      for (int x = 0; x < s.ground_size; ++x) {
        if (!(only1 & (uint32_t(1) << x))) continue;
        bool found = false;
        uint32_t only2 = b2 & ~b1;
        for (int y = 0; y < s.ground_size && !found; ++y)
          if (only2 & (uint32_t(1) << y))
            found = contains((b1 & ~(uint32_t(1) << x)) | (uint32_t(1) << y));
        if (!found) return false;
      }
    }
  return true;
}

RankAxiomReport check_rank_axioms(const RankOracle& m) {
  if (m.size() > 10) throw CapExceededError("check_rank_axioms capped at 10 elements");
  RankAxiomReport rep;
  rep.empty_zero = (m.rank(0) == 0);
  uint32_t all = m.all_mask();
  for (uint32_t a = 0; a <= all; ++a) {
    for (int e = 0; e < m.size(); ++e) {
      uint32_t bit = uint32_t(1) << e;
      if (a & bit) continue;
      int d = m.rank(a | bit) - m.rank(a);
      if (d < 0 || d > 1) rep.unit_increase = false;
    }
    if (all == 0) break;
    for (uint32_t b = 0; b <= all; ++b) {
      if (m.rank(a | b) + m.rank(a & b) > m.rank(a) + m.rank(b)) rep.submodular = false;
      if (b == all) break;
    }
    if (a == all) break;
  }
  return rep;
}

MultiAffinePoly spin_sum_z_tilde(const std::vector<std::vector<int>>& b,
                                 const std::vector<int>& moduli) {
  if (b.empty()) throw std::invalid_argument("spin_sum_z_tilde: empty matrix");
  size_t rows = b.size();
  size_t cols = b.front().size();
  for (auto& row : b)
    if (row.size() != cols) throw std::invalid_argument("spin_sum_z_tilde: ragged matrix");
  long order = 1;
  for (int m : moduli) {
    if (m < 1) throw std::invalid_argument("spin_sum_z_tilde: bad modulus");
    order *= m;
  }
  if (std::pow(static_cast<double>(order), static_cast<double>(rows)) > 1e7)
    throw CapExceededError("spin_sum_z_tilde: |M|^rows exceeds 10^7");

  std::vector<int> vars;
  for (size_t j = 0; j < cols; ++j) vars.push_back(static_cast<int>(j));
  MultiAffinePoly out(vars);
  size_t k = moduli.size();
  std::vector<int> sigma(rows * k, 0);
  Rational norm = Rational(1);
  for (size_t i = 0; i < rows; ++i) norm /= Rational(order);
  while (true) {
    uint32_t zero_cols = 0;
    for (size_t j = 0; j < cols; ++j) {
      bool zero = true;
      for (size_t c = 0; c < k && zero; ++c) {
        long acc = 0;
        for (size_t i = 0; i < rows; ++i) acc += static_cast<long>(b[i][j]) * sigma[i * k + c];
        if (((acc % moduli[c]) + moduli[c]) % moduli[c] != 0) zero = false;
      }
      if (zero) zero_cols |= uint32_t(1) << j;
    }
    // expand prod over zero columns of (1 + v_j)
    for (uint32_t sub = zero_cols;; sub = (sub - 1) & zero_cols) {
      out.add_term(sub, LaurentPoly(norm));
      if (sub == 0) break;
    }
    size_t pos = 0;
    while (pos < sigma.size()) {
      if (++sigma[pos] < moduli[pos % k]) break;
      sigma[pos++] = 0;
    }
    if (pos == sigma.size()) break;
  }
  return out;
}

}  // namespace tuttekit
