#include "tuttekit/flows.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace tuttekit {

namespace {

struct Arc {
  int to, cap;
  size_t rev;
};

struct FlowNet {
  std::vector<std::vector<Arc>> adj;
  explicit FlowNet(int n) : adj(n) {}
  void add_undirected(int u, int v) {
    // undirected unit edge: antiparallel arcs of capacity 1 each
    adj[u].push_back({v, 1, adj[v].size()});
    adj[v].push_back({u, 1, adj[u].size() - 1});
  }
  int augment_bfs(int s, int t) {
    std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
    std::queue<int> q;
    q.push(s);
    parent[s] = {s, 0};
    while (!q.empty() && parent[t].first == -1) {
      int v = q.front();
      q.pop();
      for (size_t i = 0; i < adj[v].size(); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && parent[a.to].first == -1) {
          parent[a.to] = {v, static_cast<int>(i)};
          q.push(a.to);
        }
      }
    }
    if (parent[t].first == -1) return 0;
    int v = t;
    while (v != s) {
      auto [pv, pi] = parent[v];
      Arc& a = adj[pv][pi];
      a.cap -= 1;
      adj[a.to][a.rev].cap += 1;
      v = pv;
    }
    return 1;
  }
};

}  // namespace

int max_flow(const Multigraph& g, int x, int y) {
  if (x < 0 || x >= g.num_vertices() || y < 0 || y >= g.num_vertices())
    throw std::invalid_argument("max_flow: vertex out of range");
  if (x == y) throw std::invalid_argument("max_flow: endpoints must differ");
  FlowNet net(g.num_vertices());
  for (auto& e : g.edges())
    if (!e.is_loop()) net.add_undirected(e.u, e.v);
  int total = 0;
  while (net.augment_bfs(x, y)) ++total;
  return total;
}

int maxmaxflow(const Multigraph& g) {
  int best = 0;
  for (int x = 0; x < g.num_vertices(); ++x)
    for (int y = x + 1; y < g.num_vertices(); ++y) best = std::max(best, max_flow(g, x, y));
  return best;
}

int cocycle_lambda_tilde(const Multigraph& g) {
  int n = g.num_vertices();
  if (n > 6) throw CapExceededError("cocycle_lambda_tilde capped at 6 vertices");
  int m = g.num_edges();
  if (m > 62) throw CapExceededError("cocycle_lambda_tilde: too many edges");

  // star cocycles of all but one vertex per component span the cocycle space
  auto info = g.components();
  std::vector<uint64_t> star(n, 0);
  const auto& es = g.edges();
  for (int i = 0; i < m; ++i) {
    if (es[i].is_loop()) continue;
    star[es[i].u] ^= uint64_t(1) << i;
    star[es[i].v] ^= uint64_t(1) << i;
  }
  std::vector<uint64_t> basis;
  std::vector<bool> skipped(info.k, false);
  for (int v = 0; v < n; ++v) {
    if (!skipped[info.comp[v]]) {
      skipped[info.comp[v]] = true;  // drop one star per component
      continue;
    }
    basis.push_back(star[v]);
  }
  int d = static_cast<int>(basis.size());
  if (d == 0) return 0;

  // all cocycles, indexed by coordinate vectors over the star basis
  std::vector<int> weight(size_t(1) << d);
  std::vector<uint64_t> vec(size_t(1) << d);
  for (uint32_t s = 1; s < (uint32_t(1) << d); ++s) {
    uint32_t low = s & (s - 1);
    vec[s] = vec[low] ^ basis[__builtin_ctz(s)];
    weight[s] = __builtin_popcountll(vec[s]);
  }

  // depth-first enumeration of ordered GF(2) bases (invertible coordinate
  // matrices), pruning on the running maximum weight
  int best = INT32_MAX;
  std::vector<uint32_t> chosen;   // coordinate vectors picked so far
  std::vector<uint32_t> span{0};  // GF(2) span of chosen
  auto dfs = [&](auto&& self, int depth, int cur_max) -> void {
    if (cur_max >= best) return;
    if (depth == d) {
      best = cur_max;
      return;
    }
    for (uint32_t cand = 1; cand < (uint32_t(1) << d); ++cand) {
      if (weight[cand] >= best) continue;
      bool dependent = false;
      for (uint32_t sp : span)
        if (sp == cand) { dependent = true; break; }
      if (dependent) continue;
      size_t old = span.size();
      for (size_t i = 0; i < old; ++i) span.push_back(span[i] ^ cand);
      self(self, depth + 1, std::max(cur_max, weight[cand]));
      span.resize(old);
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace tuttekit
