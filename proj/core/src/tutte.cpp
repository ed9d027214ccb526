#include "tuttekit/tutte.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <unordered_map>

#include "tuttekit/canonical.hpp"

namespace tuttekit {

namespace {

MultiAffinePoly q_power(int k, const Rational& c = Rational(1)) {
  return MultiAffinePoly(LaurentPoly::var_power(k, c));
}

MultiAffinePoly weight_num(const Edge& e) {
  if (e.w.is_exact()) return MultiAffinePoly(e.w.value);
  return MultiAffinePoly::var(e.id);
}

// solver-internal graph: anonymous edges carrying homogenized weights num/den
struct WEdge {
  int u, v;
  MultiAffinePoly num, den;
};

struct WGraph {
  int n = 0;
  std::vector<WEdge> edges;
};

WGraph to_wgraph(const Multigraph& g) {
  WGraph w;
  w.n = g.num_vertices();
  for (auto& e : g.edges())
    w.edges.push_back(WEdge{e.u, e.v, weight_num(e), MultiAffinePoly(Rational(1))});
  return w;
}

Multigraph structure_of(const WGraph& g) {
  Multigraph mg(g.n);
  for (auto& e : g.edges) mg.add_edge(e.u, e.v);
  return mg;
}

class Solver {
 public:
  explicit Solver(const SolveOptions& opts) : opts_(opts) {
    parallel_levels_ = 0;
    int j = opts.jobs;
    while (j > 1) {
      ++parallel_levels_;
      j >>= 1;
    }
  }

  MultiAffinePoly solve(WGraph g, int depth) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    MultiAffinePoly factor = q_power(0);

    // reduce to fixpoint: loops, parallel pairs, series pairs
    bool changed = true;
    while (changed) {
      changed = false;
      // loops
      for (size_t i = 0; i < g.edges.size();) {
        if (g.edges[i].u == g.edges[i].v) {
          factor *= g.edges[i].num + g.edges[i].den;
          g.edges.erase(g.edges.begin() + i);
          loop_factors_.fetch_add(1, std::memory_order_relaxed);
          changed = true;
        } else {
          ++i;
        }
      }
      if (factor.is_zero()) return factor;
      // parallel pair
      bool merged = false;
      for (size_t i = 0; i < g.edges.size() && !merged; ++i)
        for (size_t j = i + 1; j < g.edges.size() && !merged; ++j) {
          auto mi = std::minmax(g.edges[i].u, g.edges[i].v);
          auto mj = std::minmax(g.edges[j].u, g.edges[j].v);
          if (mi != mj) continue;
          WEdge& a = g.edges[i];
          WEdge& b = g.edges[j];
          MultiAffinePoly n = a.num * b.den + b.num * a.den + a.num * b.num;
          MultiAffinePoly d = a.den * b.den;
          a.num = std::move(n);
          a.den = std::move(d);
          g.edges.erase(g.edges.begin() + j);
          parallel_merges_.fetch_add(1, std::memory_order_relaxed);
          merged = changed = true;
        }
      if (merged) continue;
      // series pair at a degree-2 vertex
      for (int y = 0; y < g.n && !changed; ++y) {
        int e1 = -1, e2 = -1, ends = 0;
        for (size_t i = 0; i < g.edges.size(); ++i) {
          int touch = (g.edges[i].u == y) + (g.edges[i].v == y);
          if (!touch) continue;
          ends += touch;
          if (ends > 2) break;
          if (e1 == -1) e1 = static_cast<int>(i);
          else e2 = static_cast<int>(i);
        }
        if (ends != 2 || e2 == -1) continue;
        WEdge& a = g.edges[e1];
        WEdge& b = g.edges[e2];
        int x = a.u == y ? a.v : a.u;
        int z = b.u == y ? b.v : b.u;
        MultiAffinePoly q1 = q_power(1);
        MultiAffinePoly d = a.den * b.den;
        MultiAffinePoly new_den = d.scaled(LaurentPoly::var_power(1)) + a.num * b.den + b.num * a.den;
        a.num = a.num * b.num;
        a.den = std::move(new_den);
        a.u = x;
        a.v = z;
        g.edges.erase(g.edges.begin() + e2);
        // drop vertex y
        for (auto& e : g.edges) {
          if (e.u > y) --e.u;
          if (e.v > y) --e.v;
        }
        --g.n;
        series_merges_.fetch_add(1, std::memory_order_relaxed);
        changed = true;
      }
    }

    if (g.edges.empty()) return factor * q_power(g.n);

    Multigraph structure = structure_of(g);
    auto comp = structure.components();
    if (comp.k > 1) {
      component_splits_.fetch_add(1, std::memory_order_relaxed);
      MultiAffinePoly acc = factor;
      for (int c = 0; c < comp.k; ++c) {
        WGraph sub;
        std::vector<int> vmap(g.n, -1);
        for (int v = 0; v < g.n; ++v)
          if (comp.comp[v] == c) vmap[v] = sub.n++;
        for (auto& e : g.edges)
          if (vmap[e.u] != -1 && vmap[e.v] != -1)
            sub.edges.push_back(WEdge{vmap[e.u], vmap[e.v], e.num, e.den});
        acc *= solve(std::move(sub), depth + 1);
      }
      return acc;
    }

    auto blocks = biconnected_components(structure);
    if (blocks.size() > 1) {
      block_splits_.fetch_add(1, std::memory_order_relaxed);
      MultiAffinePoly acc = factor * q_power(1 - static_cast<int>(blocks.size()));
      for (auto& blk : blocks) {
        WGraph sub;
        std::vector<int> vmap(g.n, -1);
        for (int idx : blk) {
          const WEdge& e = g.edges[idx];
          if (vmap[e.u] == -1) vmap[e.u] = sub.n++;
          if (vmap[e.v] == -1) vmap[e.v] = sub.n++;
        }
        for (int idx : blk) {
          const WEdge& e = g.edges[idx];
          sub.edges.push_back(WEdge{vmap[e.u], vmap[e.v], e.num, e.den});
        }
        acc *= solve(std::move(sub), depth + 1);
      }
      return acc;
    }

    std::string key;
    if (opts_.use_memo) {
      Multigraph keyed(g.n);
      for (auto& e : g.edges) keyed.add_edge(e.u, e.v);
      int i = 0;
      std::vector<std::string> wkeys(g.edges.size());
      for (auto& e : g.edges) wkeys[i++] = e.num.serialize() + "/" + e.den.serialize();
      key = canonical_graph_key(
          keyed, [&](const Edge& e) { return wkeys[static_cast<size_t>(e.id)]; });
      std::lock_guard<std::mutex> lk(memo_mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        memo_hits_.fetch_add(1, std::memory_order_relaxed);
        return factor * it->second;
      }
    }

    // branch on an edge incident to a vertex of maximum degree (we are inside
    // a single biconnected component already)
    std::vector<int> deg(g.n, 0);
    for (auto& e : g.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    int best_v = 0;
    for (int v = 1; v < g.n; ++v)
      if (deg[v] > deg[best_v]) best_v = v;
    int pick = -1;
    for (size_t i = 0; i < g.edges.size(); ++i)
      if (g.edges[i].u == best_v || g.edges[i].v == best_v) {
        pick = static_cast<int>(i);
        break;
      }
    branches_.fetch_add(1, std::memory_order_relaxed);

    WEdge e = g.edges[static_cast<size_t>(pick)];
    WGraph del = g;
    del.edges.erase(del.edges.begin() + pick);
    WGraph con;
    {
      int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
      con.n = g.n - 1;
      for (size_t i = 0; i < g.edges.size(); ++i) {
        if (static_cast<int>(i) == pick) continue;
        WEdge f = g.edges[i];
        auto remap = [&](int v) { return v == b ? a : (v > b ? v - 1 : v); };
        f.u = remap(f.u);
        f.v = remap(f.v);
        con.edges.push_back(std::move(f));
      }
    }

    MultiAffinePoly zdel, zcon;
    if (depth < parallel_levels_) {
      auto fut = std::async(std::launch::async, [this, d = std::move(del), depth]() mutable {
        return solve(std::move(d), depth + 1);
      });
      zcon = solve(std::move(con), depth + 1);
      zdel = fut.get();
    } else {
      zdel = solve(std::move(del), depth + 1);
      zcon = solve(std::move(con), depth + 1);
    }
    MultiAffinePoly res = e.den * zdel + e.num * zcon;
    if (opts_.use_memo) {
      std::lock_guard<std::mutex> lk(memo_mu_);
      memo_.emplace(std::move(key), res);
    }
    return factor * res;
  }

  SolveStats stats() const {
    SolveStats s;
    s.nodes = nodes_.load();
    s.memo_hits = memo_hits_.load();
    s.branches = branches_.load();
    s.loop_factors = loop_factors_.load();
    s.parallel_merges = parallel_merges_.load();
    s.series_merges = series_merges_.load();
    s.block_splits = block_splits_.load();
    s.component_splits = component_splits_.load();
    return s;
  }

 private:
  SolveOptions opts_;
  int parallel_levels_;
  std::mutex memo_mu_;
  std::unordered_map<std::string, MultiAffinePoly> memo_;
  std::atomic<long> nodes_{0}, memo_hits_{0}, branches_{0}, loop_factors_{0},
      parallel_merges_{0}, series_merges_{0}, block_splits_{0}, component_splits_{0};
};

MultiAffinePoly solve_with_weights(const Multigraph& g, const std::map<int, LaurentPoly>& override_weights,
                                   const SolveOptions& opts) {
  WGraph w;
  w.n = g.num_vertices();
  for (auto& e : g.edges()) {
    auto it = override_weights.find(e.id);
    MultiAffinePoly num = it != override_weights.end() ? MultiAffinePoly(it->second) : weight_num(e);
    w.edges.push_back(WEdge{e.u, e.v, std::move(num), MultiAffinePoly(Rational(1))});
  }
  Solver s(opts);
  return s.solve(std::move(w), 0);
}

}  // namespace

MultiAffinePoly z_subset_expansion(const Multigraph& g) {
  int m = g.num_edges();
  if (m > 30) throw CapExceededError("z_subset_expansion capped at 30 edges");
  const auto& es = g.edges();
  std::vector<int> sym_vars;
  for (auto& e : es)
    if (!e.w.is_exact()) sym_vars.push_back(e.id);
  MultiAffinePoly out(sym_vars);
  int n = g.num_vertices();
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Dsu dsu(n);
    int k = n;
    Rational coeff(1);
    uint32_t sym_mask = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask & (uint32_t(1) << i))) continue;
      if (dsu.unite(es[i].u, es[i].v)) --k;
      if (es[i].w.is_exact()) {
        coeff *= es[i].w.value;
      } else {
        auto it = std::lower_bound(sym_vars.begin(), sym_vars.end(), es[i].id);
        sym_mask |= uint32_t(1) << (it - sym_vars.begin());
      }
    }
    if (!coeff.is_zero()) out.add_term(sym_mask, LaurentPoly::var_power(k, coeff));
  }
  return out;
}

MultiAffinePoly potts_coloring_oracle(const Multigraph& g, int q) {
  if (q < 1) throw std::invalid_argument("potts_coloring_oracle: q must be >= 1");
  int n = g.num_vertices();
  double total = std::pow(static_cast<double>(q), n);
  if (total > 1e7) throw CapExceededError("potts_coloring_oracle: q^|V| exceeds 10^7");
  const auto& es = g.edges();
  std::vector<int> sym_vars;
  for (auto& e : es)
    if (!e.w.is_exact()) sym_vars.push_back(e.id);
  MultiAffinePoly out(sym_vars);
  std::vector<int> sigma(static_cast<size_t>(n), 0);
  while (true) {
    // expand prod over monochromatic edges of (1 + v_e)
    std::vector<std::pair<uint32_t, Rational>> terms{{0u, Rational(1)}};
    for (auto& e : es) {
      if (sigma[static_cast<size_t>(e.u)] != sigma[static_cast<size_t>(e.v)]) continue;
      if (e.w.is_exact()) {
        for (auto& t : terms) t.second *= (Rational(1) + e.w.value);
      } else {
        auto it = std::lower_bound(sym_vars.begin(), sym_vars.end(), e.id);
        uint32_t bit = uint32_t(1) << (it - sym_vars.begin());
        size_t sz = terms.size();
        for (size_t i = 0; i < sz; ++i) terms.push_back({terms[i].first | bit, terms[i].second});
      }
    }
    for (auto& [mask, c] : terms) out.add_term(mask, LaurentPoly(c));
    // next coloring
    int i = 0;
    while (i < n && ++sigma[static_cast<size_t>(i)] == q) sigma[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

MultiAffinePoly gamma_flow_oracle(const Multigraph& g, const std::vector<int>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("gamma_flow_oracle: empty group");
  long order = 1;
  for (int m : moduli) {
    if (m < 1) throw std::invalid_argument("gamma_flow_oracle: bad modulus");
    order *= m;
  }
  auto info = g.components();
  double total = std::pow(static_cast<double>(order), info.cyclomatic);
  if (total > 1e7) throw CapExceededError("gamma_flow_oracle: |Gamma|^c exceeds 10^7");

  int n = g.num_vertices();
  int m = g.num_edges();
  const auto& es = g.edges();
  // BFS forest: parent edge per vertex
  std::vector<int> parent_edge(static_cast<size_t>(n), -1);
  std::vector<int> order_bfs;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> inc(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i) {
    if (es[i].is_loop()) continue;
    inc[static_cast<size_t>(es[i].u)].push_back(i);
    inc[static_cast<size_t>(es[i].v)].push_back(i);
  }
  std::vector<bool> in_tree(static_cast<size_t>(m), false);
  for (int r = 0; r < n; ++r) {
    if (seen[static_cast<size_t>(r)]) continue;
    seen[static_cast<size_t>(r)] = true;
    std::vector<int> queue{r};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      order_bfs.push_back(v);
      for (int ei : inc[static_cast<size_t>(v)]) {
        int w = es[ei].other(v);
        if (seen[static_cast<size_t>(w)]) continue;
        seen[static_cast<size_t>(w)] = true;
        parent_edge[static_cast<size_t>(w)] = ei;
        in_tree[static_cast<size_t>(ei)] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> cotree;
  for (int i = 0; i < m; ++i)
    if (!in_tree[static_cast<size_t>(i)]) cotree.push_back(i);

  size_t k = moduli.size();
  std::vector<int> sym_vars;
  for (auto& e : es)
    if (!e.w.is_exact()) sym_vars.push_back(e.id);
  MultiAffinePoly out(sym_vars);

  std::vector<std::vector<int>> flow(static_cast<size_t>(m), std::vector<int>(k, 0));
  std::vector<int> counter(cotree.size() * k, 0);
  while (true) {
    for (size_t i = 0; i < cotree.size(); ++i)
      for (size_t j = 0; j < k; ++j) flow[static_cast<size_t>(cotree[i])][j] = counter[i * k + j];
    // solve tree edges by walking leaves-to-root (reverse BFS order)
    for (auto it = order_bfs.rbegin(); it != order_bfs.rend(); ++it) {
      int v = *it;
      int pe = parent_edge[static_cast<size_t>(v)];
      if (pe == -1) continue;
      // conservation at v: sum_out - sum_in = 0, loops cancel
      std::vector<int> net(k, 0);
      for (int ei : inc[static_cast<size_t>(v)]) {
        if (ei == pe) continue;
        const Edge& e = es[static_cast<size_t>(ei)];
        if (e.u == v && e.v == v) continue;
        int s = (e.u == v) ? 1 : -1;
        for (size_t j = 0; j < k; ++j)
          net[j] = ((net[j] + s * flow[static_cast<size_t>(ei)][j]) % moduli[j] + moduli[j]) % moduli[j];
      }
      const Edge& pe_e = es[static_cast<size_t>(pe)];
      int s = (pe_e.u == v) ? 1 : -1;  // flow[pe]*s + net = 0
      for (size_t j = 0; j < k; ++j)
        flow[static_cast<size_t>(pe)][j] = ((-s * net[j]) % moduli[j] + moduli[j]) % moduli[j] % moduli[j];
    }
    // weight of this flow
    std::vector<std::pair<uint32_t, Rational>> terms{{0u, Rational(1)}};
    for (int i = 0; i < m; ++i) {
      bool zero = true;
      for (size_t j = 0; j < k; ++j)
        if (flow[static_cast<size_t>(i)][j] != 0) zero = false;
      if (!zero) continue;
      const Edge& e = es[static_cast<size_t>(i)];
      if (e.w.is_exact()) {
        for (auto& t : terms) t.second *= (Rational(1) + e.w.value);
      } else {
        auto itv = std::lower_bound(sym_vars.begin(), sym_vars.end(), e.id);
        uint32_t bit = uint32_t(1) << (itv - sym_vars.begin());
        size_t sz = terms.size();
        for (size_t i2 = 0; i2 < sz; ++i2) terms.push_back({terms[i2].first | bit, terms[i2].second});
      }
    }
    for (auto& [mask, c] : terms) out.add_term(mask, LaurentPoly(c));
    // advance the cotree counter
    size_t pos = 0;
    while (pos < counter.size()) {
      if (++counter[pos] < moduli[pos % k]) break;
      counter[pos++] = 0;
    }
    if (pos == counter.size()) break;
    if (counter.empty()) break;
  }
  return out;
}

TutteResult z_delete_contract(const Multigraph& g, const SolveOptions& opts) {
  Solver s(opts);
  TutteResult out;
  out.z = s.solve(to_wgraph(g), 0);
  out.stats = s.stats();
  if (!out.z.is_zero()) {
    int n = g.num_vertices();
    int k = g.components().k;
    if (out.z.degree_q() != n || out.z.low_degree_q() < k)
      throw std::logic_error("z_delete_contract: exponent bound check failed");
  }
  return out;
}

MultiAffinePoly graph_z(const Multigraph& g, const SolveOptions& opts) {
  return z_delete_contract(g, opts).z;
}

ReducedCore reduce_to_core(const Multigraph& g, bool wide_series) {
  ReducedCore rc;
  rc.core = g;
  rc.prefactor.num = MultiAffinePoly(Rational(1));
  rc.prefactor.den = MultiAffinePoly(Rational(1));
  for (auto& e : g.edges()) {
    PolyFraction w;
    w.num = weight_num(e);
    w.den = MultiAffinePoly(Rational(1));
    rc.weights[e.id] = w;
  }
  MultiAffinePoly q1 = q_power(1);
  bool changed = true;
  while (changed) {
    changed = false;
    // loops
    for (auto& e : rc.core.edges()) {
      if (!e.is_loop()) continue;
      const PolyFraction& w = rc.weights.at(e.id);
      ReductionStep st;
      st.kind = ReductionStep::Kind::LoopFactor;
      st.edges = {e.id};
      st.factor.num = w.num + w.den;
      st.factor.den = w.den;
      rc.prefactor.num = rc.prefactor.num * st.factor.num;
      rc.prefactor.den = rc.prefactor.den * st.factor.den;
      rc.trace.steps.push_back(st);
      rc.core = rc.core.deleted(e.id);
      rc.weights.erase(e.id);
      changed = true;
      break;
    }
    if (changed) continue;
    // bridges
    for (auto& e : rc.core.edges()) {
      if (rc.core.classify_edge(e.id) != EdgeClass::Bridge) continue;
      const PolyFraction& w = rc.weights.at(e.id);
      ReductionStep st;
      st.kind = ReductionStep::Kind::BridgeFactor;
      st.edges = {e.id};
      st.factor.num = w.den.scaled(LaurentPoly::var_power(1)) + w.num;  // q + w
      st.factor.den = w.den;
      rc.prefactor.num = rc.prefactor.num * st.factor.num;
      rc.prefactor.den = rc.prefactor.den * st.factor.den;
      rc.trace.steps.push_back(st);
      rc.core = rc.core.contracted(e.id);
      rc.weights.erase(e.id);
      changed = true;
      break;
    }
    if (changed) continue;
    // parallel pairs
    if (auto pp = rc.core.find_parallel_pair()) {
      auto [i1, i2] = *pp;
      PolyFraction w1 = rc.weights.at(i1), w2 = rc.weights.at(i2);
      ReductionStep st;
      st.kind = ReductionStep::Kind::ParallelMerge;
      st.edges = {i1, i2};
      st.new_edge = i1;
      st.factor.num = MultiAffinePoly(Rational(1));
      st.factor.den = MultiAffinePoly(Rational(1));
      st.new_weight.num = w1.num * w2.den + w2.num * w1.den + w1.num * w2.num;
      st.new_weight.den = w1.den * w2.den;
      rc.weights[i1] = st.new_weight;
      rc.weights.erase(i2);
      rc.core = rc.core.deleted(i2);
      rc.trace.steps.push_back(st);
      changed = true;
      continue;
    }
    // series pairs
    if (auto sp = rc.core.find_series_pair(wide_series)) {
      PolyFraction w1 = rc.weights.at(sp->e1), w2 = rc.weights.at(sp->e2);
      ReductionStep st;
      st.kind = ReductionStep::Kind::SeriesMerge;
      st.edges = {sp->e1, sp->e2};
      st.new_edge = sp->e1;
      MultiAffinePoly qd = (w1.den * w2.den).scaled(LaurentPoly::var_power(1));
      MultiAffinePoly cross = w1.num * w2.den + w2.num * w1.den;
      st.factor.num = qd + cross;              // q + w1 + w2
      st.factor.den = w1.den * w2.den;
      st.new_weight.num = w1.num * w2.num;     // w1 w2 / (q + w1 + w2)
      st.new_weight.den = qd + cross;
      rc.prefactor.num = rc.prefactor.num * st.factor.num;
      rc.prefactor.den = rc.prefactor.den * st.factor.den;
      rc.weights[sp->e1] = st.new_weight;
      rc.weights.erase(sp->e2);
      rc.core = rc.core.contracted(sp->e2);
      rc.trace.steps.push_back(st);
      changed = true;
      continue;
    }
  }
  return rc;
}

PolyFraction z_with_fraction_weights(const Multigraph& structure,
                                     const std::map<int, PolyFraction>& weights) {
  int m = structure.num_edges();
  if (m > 20) throw CapExceededError("z_with_fraction_weights capped at 20 edges");
  const auto& es = structure.edges();
  int n = structure.num_vertices();
  PolyFraction out;
  out.num = MultiAffinePoly();
  out.den = MultiAffinePoly(Rational(1));
  for (auto& e : es) out.den = out.den * weights.at(e.id).den;
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Dsu dsu(n);
    int k = n;
    MultiAffinePoly term = q_power(0);
    for (int i = 0; i < m; ++i) {
      const PolyFraction& w = weights.at(es[static_cast<size_t>(i)].id);
      if (mask & (uint32_t(1) << i)) {
        if (dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) --k;
        term = term * w.num;
      } else {
        term = term * w.den;
      }
    }
    out.num += term.scaled(LaurentPoly::var_power(k));
  }
  return out;
}

LaurentPoly chromatic_poly(const Multigraph& g, const SolveOptions& opts) {
  std::map<int, LaurentPoly> w;
  for (auto& e : g.edges()) w[e.id] = LaurentPoly(Rational(-1));
  MultiAffinePoly z = solve_with_weights(g, w, opts);
  return z.is_zero() ? LaurentPoly() : z.q_poly();
}

LaurentPoly flow_poly(const Multigraph& g, const SolveOptions& opts) {
  std::map<int, LaurentPoly> w;
  for (auto& e : g.edges()) w[e.id] = LaurentPoly::var_power(1, Rational(-1));  // v = -q
  MultiAffinePoly z = solve_with_weights(g, w, opts);
  if (z.is_zero()) return LaurentPoly();
  Rational sign(g.num_edges() % 2 == 0 ? 1 : -1);
  return z.q_poly().shifted(-g.num_vertices()).scaled(sign);
}

MultiAffinePoly flow_poly_multivariate(const Multigraph& g, const SolveOptions& opts) {
  MultiAffinePoly z = graph_z(g, opts);
  return z.reciprocal_transform().scaled(LaurentPoly::var_power(-g.num_vertices()));
}

Rational reliability_at(const Multigraph& g, const std::map<int, Rational>& p) {
  Multigraph h = g;
  // contract certain edges, delete impossible ones
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& e : h.edges()) {
      auto it = p.find(e.id);
      if (it == p.end()) throw std::invalid_argument("reliability_at: missing probability for edge");
      if (it->second < 0 || it->second > 1)
        throw std::invalid_argument("reliability_at: probability out of [0,1]");
      if (it->second == 1) {
        h = h.contracted(e.id);
        changed = true;
        break;
      }
      if (it->second.is_zero()) {
        h = h.deleted(e.id);
        changed = true;
        break;
      }
    }
  }
  if (!h.connected()) return Rational(0);
  Rational prefix(1);
  std::map<int, LaurentPoly> w;
  for (auto& e : h.edges()) {
    const Rational& pe = p.at(e.id);
    prefix *= (Rational(1) - pe);
    w[e.id] = LaurentPoly(pe / (Rational(1) - pe));
  }
  MultiAffinePoly z = solve_with_weights(h, w, SolveOptions{});
  if (z.is_zero()) return Rational(0);
  int k = h.components().k;
  return prefix * z.q_poly().coeff(k);
}

LaurentPoly reliability_poly(const Multigraph& g) {
  if (g.num_edges() > 24) throw CapExceededError("reliability_poly capped at 24 edges");
  if (!g.connected()) return LaurentPoly();
  int m = g.num_edges();
  int n = g.num_vertices();
  const auto& es = g.edges();
  LaurentPoly out;  // variable read as p
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Dsu dsu(n);
    int k = n;
    for (int i = 0; i < m; ++i)
      if (mask & (uint32_t(1) << i))
        if (dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) --k;
    if (k != 1) continue;
    int a = __builtin_popcount(mask);
    // p^a (1-p)^{m-a}
    LaurentPoly term = LaurentPoly::var_power(a);
    LaurentPoly one_minus = LaurentPoly(Rational(1)) - LaurentPoly::var_power(1);
    out += term * one_minus.pow(static_cast<unsigned>(m - a));
  }
  return out;
}

QZeroPolys q_zero_limits(const Multigraph& g) {
  int m = g.num_edges();
  if (m > 24) throw CapExceededError("q_zero_limits capped at 24 edges");
  const auto& es = g.edges();
  int n = g.num_vertices();
  int kg = g.components().k;
  std::vector<int> sym_vars;
  for (auto& e : es)
    if (!e.w.is_exact()) sym_vars.push_back(e.id);
  QZeroPolys out{MultiAffinePoly(sym_vars), MultiAffinePoly(sym_vars), MultiAffinePoly(sym_vars)};
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Dsu dsu(n);
    int k = n;
    Rational coeff(1);
    uint32_t sym_mask = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask & (uint32_t(1) << i))) continue;
      if (dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) --k;
      if (es[static_cast<size_t>(i)].w.is_exact()) coeff *= es[static_cast<size_t>(i)].w.value;
      else {
        auto it = std::lower_bound(sym_vars.begin(), sym_vars.end(), es[static_cast<size_t>(i)].id);
        sym_mask |= uint32_t(1) << (it - sym_vars.begin());
      }
    }
    if (coeff.is_zero()) continue;
    int c = __builtin_popcount(mask) - n + k;
    if (k == kg) out.c.add_term(sym_mask, LaurentPoly(coeff));
    if (c == 0) out.f.add_term(sym_mask, LaurentPoly(coeff));
    if (k == kg && c == 0) out.t.add_term(sym_mask, LaurentPoly(coeff));
  }
  return out;
}

QZeroPolys q_zero_limits_from_z(const Multigraph& g, const MultiAffinePoly& z) {
  int n = g.num_vertices();
  int kg = g.components().k;
  QZeroPolys out{MultiAffinePoly(z.universe()), MultiAffinePoly(z.universe()), MultiAffinePoly(z.universe())};
  for (auto& [mask, c] : z.terms()) {
    // C: coefficient of q^{k(G)}
    Rational lc = c.coeff(kg);
    if (!lc.is_zero()) out.c.add_term(mask, LaurentPoly(lc));
    // F: k(A) + |A| = |V| picks forests
    int sz = __builtin_popcount(mask);
    Rational fc = c.coeff(n - sz);
    if (!fc.is_zero()) out.f.add_term(mask, LaurentPoly(fc));
    // T needs both at once, so the coefficient must expose a single exponent
    if (c.terms().size() != 1)
      throw std::invalid_argument("q_zero_limits_from_z: needs fully symbolic Z");
    int k = c.terms().begin()->first;
    if (k == kg && k == n - sz) out.t.add_term(mask, c);
  }
  return out;
}

AlphaLimitReport alpha_limit_check(const Multigraph& g, const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must be in (0,1)");
  int m = g.num_edges();
  if (m > 24) throw CapExceededError("alpha_limit_check capped at 24 edges");
  const auto& es = g.edges();
  int n = g.num_vertices();
  int kg = g.components().k;
  std::vector<int> sym_vars;
  for (auto& e : es) sym_vars.push_back(e.id);  // treat every edge symbolically (x_e)
  AlphaLimitReport rep;
  rep.limit = MultiAffinePoly(sym_vars);
  bool have_min = false;
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Dsu dsu(n);
    int k = n;
    for (int i = 0; i < m; ++i)
      if (mask & (uint32_t(1) << i))
        if (dsu.unite(es[static_cast<size_t>(i)].u, es[static_cast<size_t>(i)].v)) --k;
    int sz = __builtin_popcount(mask);
    // exponent of q on the term q^{k(A)} (q^alpha)^{|A|} q^{-alpha n - (1-alpha) k(G)}
    Rational expo = Rational(k) + alpha * Rational(sz) - alpha * Rational(n) - (Rational(1) - alpha) * Rational(kg);
    if (expo.is_zero()) {
      rep.limit.add_term(mask, LaurentPoly(Rational(1)));
    } else if (expo > 0) {
      if (!have_min || expo < rep.min_positive_exponent) {
        rep.min_positive_exponent = expo;
        have_min = true;
      }
    } else {
      rep.ok = false;
      return rep;
    }
  }
  rep.ok = (rep.limit == q_zero_limits(g).t);
  return rep;
}

SparsePoly tutte_xy(const Multigraph& g, const SolveOptions& opts) {
  MultiAffinePoly z = graph_z(g, opts);
  int n = g.num_vertices();
  int ke = g.components().k;
  SparsePoly xm1 = SparsePoly::var(kVarX) - SparsePoly(Rational(1));
  SparsePoly ym1 = SparsePoly::var(kVarY) - SparsePoly(Rational(1));
  SparsePoly qsub = xm1 * ym1;
  SparsePoly numerator;
  for (auto& [mask, c] : z.terms()) {
    int sz = __builtin_popcount(mask);
    SparsePoly term;
    for (auto& [e, coef] : c.terms()) {
      if (e < 0) throw std::domain_error("tutte_xy: negative q exponent");
      term += qsub.pow(static_cast<unsigned>(e)).scaled(coef);
    }
    numerator += term * ym1.pow(static_cast<unsigned>(sz));
  }
  for (int i = 0; i < ke; ++i) numerator = numerator.divide_exact_binomial(kVarX, Rational(-1));
  for (int i = 0; i < n; ++i) numerator = numerator.divide_exact_binomial(kVarY, Rational(-1));
  return numerator;
}

DualityReport duality_check(const Multigraph& g, const RotationSystem& rot) {
  // weights must be symbolic for the transform comparisons
  for (auto& e : g.edges())
    if (e.w.is_exact())
      throw std::invalid_argument("duality_check: edges must carry symbolic weights");
  PlanarDualResult pd = planar_dual(g, rot);
  DualityReport rep;
  MultiAffinePoly zg = graph_z(g);
  MultiAffinePoly zd = graph_z(pd.dual);
  MultiAffinePoly rhs = zg.reciprocal_transform().scaled(LaurentPoly::var_power(1 - g.num_vertices()));
  rep.z_identity = (zd == rhs);
  MultiAffinePoly fg = flow_poly_multivariate(g);
  rep.flow_identity = (zd == fg.scaled(LaurentPoly::var_power(1)));
  QZeroPolys qg = q_zero_limits(g);
  QZeroPolys qd = q_zero_limits(pd.dual);
  rep.c_identity = (qd.c == qg.f.complement_transform());
  rep.f_identity = (qd.f == qg.c.complement_transform());
  rep.t_identity = (qd.t == qg.t.complement_transform());
  return rep;
}

}  // namespace tuttekit
