#include "tuttekit/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tuttekit {

namespace {

std::string encode_with_order(const Multigraph& g, const std::vector<int>& pos,
                              const std::vector<std::string>& ekey) {
  std::vector<std::string> rows;
  rows.reserve(g.edges().size());
  const auto& es = g.edges();
  for (size_t i = 0; i < es.size(); ++i) {
    int a = pos[es[i].u], b = pos[es[i].v];
    if (a > b) std::swap(a, b);
    rows.push_back(std::to_string(a) + "," + std::to_string(b) + "," + ekey[i]);
  }
  std::sort(rows.begin(), rows.end());
  std::string out = "n" + std::to_string(g.num_vertices()) + ";";
  for (auto& r : rows) {
    out += r;
    out += ";";
  }
  return out;
}

}  // namespace

std::string canonical_graph_key(const Multigraph& g,
                                const std::function<std::string(const Edge&)>& edge_key,
                                long perm_budget) {
  int n = g.num_vertices();
  const auto& es = g.edges();
  std::vector<std::string> ekey(es.size());
  for (size_t i = 0; i < es.size(); ++i) ekey[i] = edge_key(es[i]);

  // iterated refinement: color signature = old color + sorted incidences
  std::vector<int> color(n, 0);
  int ncolors = 1;
  for (int round = 0; round < n + 1; ++round) {
    std::vector<std::string> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::string> inc;
      for (size_t i = 0; i < es.size(); ++i) {
        if (es[i].is_loop()) {
          if (es[i].u == v) inc.push_back("L" + ekey[i]);
          continue;
        }
        if (es[i].u == v) inc.push_back("e" + std::to_string(color[es[i].v]) + ":" + ekey[i]);
        else if (es[i].v == v) inc.push_back("e" + std::to_string(color[es[i].u]) + ":" + ekey[i]);
      }
      std::sort(inc.begin(), inc.end());
      std::string s = "c" + std::to_string(color[v]) + "|";
      for (auto& t : inc) s += t + "|";
      sig[v] = std::move(s);
    }
    std::map<std::string, int> dict;
    std::vector<int> nc(n);
    for (int v = 0; v < n; ++v) {
      auto [it, fresh] = dict.emplace(sig[v], static_cast<int>(dict.size()));
      nc[v] = it->second;
    }
    bool stable = static_cast<int>(dict.size()) == ncolors;
    ncolors = static_cast<int>(dict.size());
    color = std::move(nc);
    if (stable) break;
  }

  // vertices grouped by color; canonical order = minimal over within-class perms
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  // class boundaries
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  long combos = 1;
  for (auto& [a, b] : classes) {
    for (int f = 2; f <= b - a; ++f) {
      combos *= f;
      if (combos > perm_budget) break;
    }
    if (combos > perm_budget) break;
  }

  std::vector<int> pos(n);
  if (combos > perm_budget) {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    return encode_with_order(g, pos, ekey);
  }

  std::string best;
  std::vector<int> cur = order;
  // odometer over per-class permutations
  auto rec = [&](auto&& self, size_t ci) -> void {
    if (ci == classes.size()) {
      for (int i = 0; i < n; ++i) pos[cur[i]] = i;
      std::string enc = encode_with_order(g, pos, ekey);
      if (best.empty() || enc < best) best = std::move(enc);
      return;
    }
    auto [a, b] = classes[ci];
    std::sort(cur.begin() + a, cur.begin() + b);
    do {
      self(self, ci + 1);
    } while (std::next_permutation(cur.begin() + a, cur.begin() + b));
  };
  rec(rec, 0);
  return best;
}

std::string canonical_graph_key(const Multigraph& g, long perm_budget) {
  return canonical_graph_key(g, [](const Edge& e) { return e.w.key(); }, perm_budget);
}

}  // namespace tuttekit
