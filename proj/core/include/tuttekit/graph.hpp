#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

struct UnknownEdgeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EdgeWeight {
  enum class Kind { Symbolic, Exact };
  Kind kind = Kind::Symbolic;
  Rational value{0};  // meaningful for Exact
  std::string name;   // symbol name; empty means the default per-edge "v<id>"

  static EdgeWeight exact(Rational v) { return {Kind::Exact, std::move(v), ""}; }
  static EdgeWeight symbol(std::string n = "") { return {Kind::Symbolic, Rational(0), std::move(n)}; }
  bool is_exact() const { return kind == Kind::Exact; }
  std::string key() const;  // stable text form for hashing
};

struct Edge {
  int id;
  int u, v;
  EdgeWeight w;
  bool is_loop() const { return u == v; }
  // endpoint by end index (0 -> u, 1 -> v)
  int endpoint(int end) const { return end == 0 ? u : v; }
  int other(int x) const { return u == x ? v : u; }
};

enum class EdgeClass { Loop, Bridge, Normal };

// Undirected multigraph. Vertex ids are dense 0..n-1 and are re-packed on
// contraction; edge ids are stable for the lifetime of the object and are
// never reused, so they survive deletion/contraction of other edges.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {}

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int id) const;
  const Edge& edge(int id) const;

  int add_vertex() { return n_++; }
  int add_edge(int u, int v, EdgeWeight w = EdgeWeight::symbol());
  // used where edge ids must match a sibling graph (e.g. planar duals)
  void add_edge_with_id(int id, int u, int v, EdgeWeight w);

  // degree as edge-end count (a loop contributes 2)
  int degree(int v) const;
  int max_degree() const;
  // second-largest degree over vertices (Delta_2); 0 if fewer than 2 vertices
  int second_max_degree() const;

  Multigraph deleted(int eid) const;
  // Contracting a loop deletes it. vmap (if given) receives old -> new vertex ids.
  Multigraph contracted(int eid) const;
  Multigraph contracted(int eid, std::vector<int>& vmap) const;
  // Identify two distinct vertices without touching any edge.
  Multigraph identified(int a, int b, std::vector<int>& vmap) const;

  struct ComponentInfo {
    int k = 0;                  // number of connected components
    int cyclomatic = 0;         // |E| - |V| + k
    std::vector<int> comp;      // vertex -> component index
  };
  ComponentInfo components() const;
  // components of the spanning subgraph using only the listed edges
  ComponentInfo components_of(const std::vector<int>& edge_ids) const;
  bool connected() const { return n_ <= 1 || components().k == 1; }

  EdgeClass classify_edge(int eid) const;

  // first pair of distinct non-loop edges with equal endpoint sets
  std::optional<std::pair<int, int>> find_parallel_pair() const;
  struct SeriesPair {
    int e1, e2;
    int mid;  // the degree-2 vertex (narrow) or -1 (wide two-edge cut)
  };
  // narrow sense: a degree-2 vertex whose two ends belong to two distinct
  // non-loop edges; wide sense additionally searches for two-edge cocircuits
  std::optional<SeriesPair> find_series_pair(bool wide = false) const;

  // graph minor commutation and tests want plain structural equality
  friend bool operator==(const Multigraph& a, const Multigraph& b);

  std::string debug_string() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  int next_id_ = 0;
};

// Biconnected components as edge-id groups; every loop forms its own group.
std::vector<std::vector<int>> biconnected_components(const Multigraph& g);
std::vector<int> articulation_points(const Multigraph& g);

// Small union-find used by the subset oracles.
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { for (int i = 0; i < n; ++i) p[i] = i; }
  int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace tuttekit
