#include "tuttekit/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tuttekit {

std::string EdgeWeight::key() const {
  if (kind == Kind::Exact) return "r:" + rational_to_string(value);
  return "s:" + name;
}

bool Multigraph::has_edge(int id) const {
  for (auto& e : edges_)
    if (e.id == id) return true;
  return false;
}

const Edge& Multigraph::edge(int id) const {
  for (auto& e : edges_)
    if (e.id == id) return e;
  throw UnknownEdgeError("unknown edge id " + std::to_string(id));
}

int Multigraph::add_edge(int u, int v, EdgeWeight w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("add_edge: endpoint out of range");
  int id = next_id_++;
  if (w.kind == EdgeWeight::Kind::Symbolic && w.name.empty()) w.name = "v" + std::to_string(id);
  edges_.push_back(Edge{id, u, v, std::move(w)});
  return id;
}

void Multigraph::add_edge_with_id(int id, int u, int v, EdgeWeight w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("add_edge_with_id: endpoint out of range");
  if (has_edge(id)) throw std::invalid_argument("add_edge_with_id: duplicate id");
  if (w.kind == EdgeWeight::Kind::Symbolic && w.name.empty()) w.name = "v" + std::to_string(id);
  edges_.push_back(Edge{id, u, v, std::move(w)});
  next_id_ = std::max(next_id_, id + 1);
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Multigraph::second_max_degree() const {
  if (n_ < 2) return 0;
  int d1 = -1, d2 = -1;
  for (int v = 0; v < n_; ++v) {
    int d = degree(v);
    if (d > d1) { d2 = d1; d1 = d; }
    else if (d > d2) d2 = d;
  }
  return d2;
}

Multigraph Multigraph::deleted(int eid) const {
  Multigraph g = *this;
  auto it = std::find_if(g.edges_.begin(), g.edges_.end(), [&](const Edge& e) { return e.id == eid; });
  if (it == g.edges_.end()) throw UnknownEdgeError("deleted: unknown edge id " + std::to_string(eid));
  g.edges_.erase(it);
  return g;
}

Multigraph Multigraph::contracted(int eid) const {
  std::vector<int> vmap;
  return contracted(eid, vmap);
}

Multigraph Multigraph::contracted(int eid, std::vector<int>& vmap) const {
  const Edge& e = edge(eid);
  if (e.is_loop()) {
    vmap.resize(n_);
    for (int i = 0; i < n_; ++i) vmap[i] = i;
    return deleted(eid);
  }
  Multigraph g = identified(e.u, e.v, vmap);
  return g.deleted(eid);
}

Multigraph Multigraph::identified(int a, int b, std::vector<int>& vmap) const {
  if (a == b) throw std::invalid_argument("identified: vertices must be distinct");
  if (a > b) std::swap(a, b);
  vmap.assign(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (i == b) vmap[i] = a;
    else vmap[i] = i < b ? i : i - 1;
  }
  Multigraph g(n_ - 1);
  g.next_id_ = next_id_;
  for (auto e : edges_) {
    e.u = vmap[e.u];
    e.v = vmap[e.v];
    g.edges_.push_back(std::move(e));
  }
  return g;
}

Multigraph::ComponentInfo Multigraph::components() const {
  Dsu dsu(n_);
  for (auto& e : edges_) dsu.unite(e.u, e.v);
  ComponentInfo info;
  info.comp.assign(n_, -1);
  for (int v = 0; v < n_; ++v) {
    int r = dsu.find(v);
    if (info.comp[r] == -1) info.comp[r] = info.k++;
    info.comp[v] = info.comp[r];
  }
  info.cyclomatic = num_edges() - n_ + info.k;
  return info;
}

Multigraph::ComponentInfo Multigraph::components_of(const std::vector<int>& edge_ids) const {
  Dsu dsu(n_);
  for (int id : edge_ids) {
    const Edge& e = edge(id);
    dsu.unite(e.u, e.v);
  }
  ComponentInfo info;
  info.comp.assign(n_, -1);
  for (int v = 0; v < n_; ++v) {
    int r = dsu.find(v);
    if (info.comp[r] == -1) info.comp[r] = info.k++;
    info.comp[v] = info.comp[r];
  }
  info.cyclomatic = static_cast<int>(edge_ids.size()) - n_ + info.k;
  return info;
}

EdgeClass Multigraph::classify_edge(int eid) const {
  const Edge& e = edge(eid);
  if (e.is_loop()) return EdgeClass::Loop;
  return deleted(eid).components().k > components().k ? EdgeClass::Bridge : EdgeClass::Normal;
}

std::optional<std::pair<int, int>> Multigraph::find_parallel_pair() const {
  std::map<std::pair<int, int>, int> seen;
  for (auto& e : edges_) {
    if (e.is_loop()) continue;
    auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = seen.emplace(std::pair<int, int>(key.first, key.second), e.id);
    if (!fresh) return std::make_pair(it->second, e.id);
  }
  return std::nullopt;
}

std::optional<Multigraph::SeriesPair> Multigraph::find_series_pair(bool wide) const {
  // narrow sense: degree-2 vertex with two distinct non-loop edges
  for (int y = 0; y < n_; ++y) {
    int e1 = -1, e2 = -1, ends = 0;
    bool bad = false;
    for (auto& e : edges_) {
      int touch = (e.u == y) + (e.v == y);
      if (touch == 0) continue;
      ends += touch;
      if (touch == 2) { bad = true; break; }  // loop at y
      if (e1 == -1) e1 = e.id;
      else if (e2 == -1) e2 = e.id;
    }
    if (!bad && ends == 2 && e2 != -1) return SeriesPair{e1, e2, y};
  }
  if (!wide) return std::nullopt;
  // wide sense: a two-edge cocircuit {e1, e2} (neither is a bridge, removing
  // both disconnects something they currently join)
  int k0 = components().k;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].is_loop()) continue;
    for (size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[j].is_loop()) continue;
      Multigraph g2 = deleted(edges_[i].id).deleted(edges_[j].id);
      if (g2.components().k <= k0) continue;
      if (deleted(edges_[i].id).components().k > k0) continue;  // e1 is a bridge
      if (deleted(edges_[j].id).components().k > k0) continue;  // e2 is a bridge
      return SeriesPair{edges_[i].id, edges_[j].id, -1};
    }
  }
  return std::nullopt;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  auto norm = [](const Multigraph& g) {
    std::vector<std::tuple<int, int, int, std::string>> v;
    for (auto& e : g.edges_) {
      auto mm = std::minmax(e.u, e.v);
      v.emplace_back(e.id, mm.first, mm.second, e.w.key());
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  return norm(a) == norm(b);
}

std::string Multigraph::debug_string() const {
  std::ostringstream os;
  os << "V=" << n_ << " E={";
  for (auto& e : edges_) os << e.id << ":(" << e.u << "," << e.v << "," << e.w.key() << ") ";
  os << "}";
  return os.str();
}

namespace {

struct BlockFinder {
  const Multigraph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge idx)
  std::vector<int> num, low;
  std::vector<bool> is_art;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  int root = -1;

  explicit BlockFinder(const Multigraph& graph) : g(graph) {
    adj.resize(g.num_vertices());
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
      if (es[i].is_loop()) {
        blocks.push_back({es[i].id});  // loops are their own blocks
        continue;
      }
      adj[es[i].u].emplace_back(es[i].v, static_cast<int>(i));
      adj[es[i].v].emplace_back(es[i].u, static_cast<int>(i));
    }
    num.assign(g.num_vertices(), -1);
    low.assign(g.num_vertices(), 0);
    is_art.assign(g.num_vertices(), false);
  }

  void dfs(int v, int parent_edge) {
    num[v] = low[v] = timer++;
    int children = 0;
    for (auto [w, ei] : adj[v]) {
      if (ei == parent_edge) { parent_edge = -2; continue; }  // skip the tree edge once
      if (num[w] == -1) {
        ++children;
        edge_stack.push_back(ei);
        dfs(w, ei);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) {
          if (v != root || children > 1) is_art[v] = true;
          std::vector<int> blk;
          while (true) {
            int top = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(g.edges()[top].id);
            if (top == ei) break;
          }
          blocks.push_back(std::move(blk));
        }
      } else if (num[w] < num[v]) {
        edge_stack.push_back(ei);
        low[v] = std::min(low[v], num[w]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> biconnected_components(const Multigraph& g) {
  BlockFinder bf(g);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (bf.num[v] == -1) { bf.root = v; bf.dfs(v, -1); }
  return bf.blocks;
}

std::vector<int> articulation_points(const Multigraph& g) {
  BlockFinder bf(g);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (bf.num[v] == -1) { bf.root = v; bf.dfs(v, -1); }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (bf.is_art[v]) out.push_back(v);
  return out;
}

}  // namespace tuttekit
