#include "tuttekit/fixtures.hpp"

#include <random>
#include <stdexcept>

namespace tuttekit {

Multigraph path_graph(int edges) {
  if (edges < 0) throw std::invalid_argument("path_graph: negative length");
  Multigraph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star_graph: negative leaf count");
  Multigraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Multigraph cycle_graph(int n) {
  if (n < 1) throw std::invalid_argument("cycle_graph: needs n >= 1");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: needs n >= 1");
  Multigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Multigraph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel_graph: needs rim >= 3");
  Multigraph g(rim + 1);
  for (int i = 0; i < rim; ++i) g.add_edge(i, (i + 1) % rim);
  for (int i = 0; i < rim; ++i) g.add_edge(i, rim);
  return g;
}

Multigraph theta_graph(int strand_len, int strands) {
  if (strand_len < 1 || strands < 1)
    throw std::invalid_argument("theta_graph: needs strand_len >= 1 and strands >= 1");
  Multigraph g(2);
  for (int s = 0; s < strands; ++s) {
    int prev = 0;
    for (int i = 0; i + 1 < strand_len; ++i) {
      int mid = g.add_vertex();
      g.add_edge(prev, mid);
      prev = mid;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Multigraph petersen_graph() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);            // outer C5
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);    // inner pentagram
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);                  // spokes
  return g;
}

uint32_t k4_case_edge_mask(char which) {
  // complete_graph(4) ids: 0=(0,1) 1=(0,2) 2=(0,3) 3=(1,2) 4=(1,3) 5=(2,3)
  switch (which) {
    case 'a': return 0b000001;  // one edge
    case 'b': return 0b100001;  // (0,1) and (2,3): disjoint
    case 'c': return 0b000011;  // (0,1) and (0,2): adjacent
    case 'd': return 0b000111;  // the star at vertex 0
    case 'e': return 0b100011;  // the path 1-0-2-3
    default: throw std::invalid_argument("k4 case must be one of a..e");
  }
}

Multigraph k4_case_graph(char which) {
  uint32_t mask = k4_case_edge_mask(which);
  Multigraph g(4);
  int id = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      g.add_edge(u, v, EdgeWeight::symbol((mask & (uint32_t(1) << id)) ? "a" : "b"));
      ++id;
    }
  return g;
}

RotationSystem cycle_embedding(int n) {
  if (n < 3) throw std::invalid_argument("cycle_embedding: needs n >= 3");
  RotationSystem rot;
  rot.at.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    // edge v leaves v (end 0); edge v-1 arrives at v (end 1)
    rot.at[static_cast<size_t>(v)] = {{v, 0}, {(v - 1 + n) % n, 1}};
  }
  return rot;
}

RotationSystem k4_embedding() {
  // vertex 0 in the centre of triangle 1,2,3; counterclockwise everywhere
  RotationSystem rot;
  rot.at = {
      {{0, 0}, {1, 0}, {2, 0}},  // at 0: towards 1, 2, 3
      {{3, 0}, {0, 1}, {4, 0}},  // at 1: towards 2, 0, 3
      {{5, 0}, {1, 1}, {3, 1}},  // at 2: towards 3, 0, 1
      {{4, 1}, {2, 1}, {5, 1}},  // at 3: towards 1, 0, 2
  };
  return rot;
}

RotationSystem wheel_embedding(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel_embedding: needs rim >= 3");
  RotationSystem rot;
  rot.at.resize(static_cast<size_t>(rim) + 1);
  for (int i = 0; i < rim; ++i) {
    // counterclockwise at a rim vertex: next rim edge, spoke, previous rim edge
    rot.at[static_cast<size_t>(i)] = {{i, 0}, {rim + i, 0}, {(i - 1 + rim) % rim, 1}};
  }
  for (int i = 0; i < rim; ++i) rot.at[static_cast<size_t>(rim)].push_back({rim + i, 1});
  return rot;
}

RotationSystem loop_embedding() {
  RotationSystem rot;
  rot.at = {{{0, 0}, {0, 1}}};
  return rot;
}

std::vector<NamedFixture> standard_fixtures() {
  std::vector<NamedFixture> out;
  out.push_back({"p1", path_graph(1), std::nullopt, "single edge"});
  out.push_back({"p2", path_graph(2), std::nullopt, "two-edge path"});
  out.push_back({"p3", path_graph(3), std::nullopt, "three-edge path"});
  out.push_back({"star3", star_graph(3), std::nullopt, "three-leaf star"});
  out.push_back({"c3", cycle_graph(3), cycle_embedding(3), "triangle"});
  out.push_back({"c4", cycle_graph(4), cycle_embedding(4), "four-cycle"});
  out.push_back({"c5", cycle_graph(5), cycle_embedding(5), "five-cycle"});
  out.push_back({"c6", cycle_graph(6), cycle_embedding(6), "six-cycle"});
  // K3 edge order is lexicographic ((0,1),(0,2),(1,2)), not the cycle order
  RotationSystem k3_rot;
  k3_rot.at = {{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}, {{1, 1}, {2, 1}}};
  out.push_back({"k3", complete_graph(3), k3_rot, "complete graph on 3 vertices"});
  out.push_back({"k4", complete_graph(4), k4_embedding(), "complete graph on 4 vertices"});
  out.push_back({"k5", complete_graph(5), std::nullopt, "complete graph on 5 vertices"});
  out.push_back({"w4", wheel_graph(4), wheel_embedding(4), "wheel with 4 rim vertices"});
  out.push_back({"w5", wheel_graph(5), wheel_embedding(5), "wheel with 5 rim vertices"});
  out.push_back({"theta22", theta_graph(2, 2), std::nullopt, "two length-2 strands (a 4-cycle)"});
  out.push_back({"theta23", theta_graph(2, 3), std::nullopt, "three length-2 strands"});
  out.push_back({"petersen", petersen_graph(), std::nullopt, "Petersen graph"});
  out.push_back({"loop", cycle_graph(1), loop_embedding(), "single loop"});
  for (char c = 'a'; c <= 'e'; ++c)
    out.push_back({std::string("k4-case-") + c, k4_case_graph(c), k4_embedding(),
                   "K4 with the two-weight assignment, case " + std::string(1, c)});
  return out;
}

std::vector<NamedFixture> series_parallel_fixtures() {
  std::vector<NamedFixture> out;
  out.push_back({"sp-path", path_graph(4), std::nullopt, "four-edge path"});
  out.push_back({"sp-cycle", cycle_graph(5), std::nullopt, "five-cycle"});
  out.push_back({"sp-theta", theta_graph(2, 3), std::nullopt, "three length-2 strands"});
  Multigraph diamond = complete_graph(4).deleted(0);  // K4 minus one edge
  out.push_back({"sp-diamond", diamond, std::nullopt, "K4 minus an edge"});
  Multigraph mixed(4);  // parallel triple with a series tail
  mixed.add_edge(0, 1);
  mixed.add_edge(0, 1);
  mixed.add_edge(0, 1);
  mixed.add_edge(1, 2);
  mixed.add_edge(2, 3);
  out.push_back({"sp-mixed", mixed, std::nullopt, "parallel triple with a two-edge tail"});
  return out;
}

std::vector<Multigraph> all_multigraphs(int max_vertices, int max_edges) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    // endpoint types in canonical order: loops first, then pairs
    std::vector<std::pair<int, int>> types;
    for (int u = 0; u < n; ++u) types.push_back({u, u});
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) types.push_back({u, v});
    // multisets over types: nondecreasing type index sequences
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> void {
      Multigraph g(n);
      for (int t : chosen)
        g.add_edge(types[static_cast<size_t>(t)].first, types[static_cast<size_t>(t)].second);
      out.push_back(std::move(g));
      if (static_cast<int>(chosen.size()) == max_edges) return;
      for (int t = start; t < static_cast<int>(types.size()); ++t) {
        chosen.push_back(t);
        self(self, t);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<Multigraph> random_multigraphs(int count, int max_edges, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  std::uniform_int_distribution<int> nv(1, 6);
  for (int i = 0; i < count; ++i) {
    int n = nv(rng);
    std::uniform_int_distribution<int> ne(0, max_edges), pick(0, n - 1);
    int m = ne(rng);
    Multigraph g(n);
    for (int j = 0; j < m; ++j) g.add_edge(pick(rng), pick(rng));  // loops allowed
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Multigraph> bounded_degree_corpus(int count, int max_degree, int max_vertices,
                                              uint64_t seed) {
  if (max_degree < 1) throw std::invalid_argument("bounded_degree_corpus: max_degree >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  std::uniform_int_distribution<int> nv(2, max_vertices);
  while (static_cast<int>(out.size()) < count) {
    int n = nv(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> ne(1, std::max(1, n * max_degree / 2));
    int target = ne(rng);
    Multigraph g(n);
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int attempts = 0; g.num_edges() < target && attempts < 20 * target; ++attempts) {
      int u = pick(rng), v = pick(rng);
      if (u == v) continue;
      if (deg[static_cast<size_t>(u)] >= max_degree || deg[static_cast<size_t>(v)] >= max_degree)
        continue;
      g.add_edge(u, v);
      ++deg[static_cast<size_t>(u)];
      ++deg[static_cast<size_t>(v)];
    }
    if (g.num_edges() == 0) continue;
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

Multigraph tree_from_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> deg(static_cast<size_t>(n), 1);
  for (int x : code) ++deg[static_cast<size_t>(x)];
  Multigraph g(n);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int x : code) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) {
        leaf = v;
        break;
      }
    used[static_cast<size_t>(leaf)] = true;
    g.add_edge(leaf, x);
    --deg[static_cast<size_t>(x)];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 1) (a < 0 ? a : b) = v;
  if (a >= 0 && b >= 0) g.add_edge(a, b);
  return g;
}

}  // namespace

std::vector<Multigraph> all_labeled_trees(int vertices) {
  if (vertices < 1 || vertices > 6)
    throw std::invalid_argument("all_labeled_trees: 1 <= vertices <= 6");
  std::vector<Multigraph> out;
  if (vertices == 1) {
    out.push_back(Multigraph(1));
    return out;
  }
  if (vertices == 2) {
    out.push_back(path_graph(1));
    return out;
  }
  std::vector<int> code(static_cast<size_t>(vertices - 2), 0);
  while (true) {
    out.push_back(tree_from_pruefer(code, vertices));
    int i = static_cast<int>(code.size()) - 1;
    while (i >= 0 && code[static_cast<size_t>(i)] == vertices - 1) code[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++code[static_cast<size_t>(i)];
  }
  return out;
}

Multigraph random_tree(int edges, uint64_t seed) {
  if (edges < 1) throw std::invalid_argument("random_tree: needs edges >= 1");
  int n = edges + 1;
  if (n == 2) return path_graph(1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<size_t>(n - 2));
  for (auto& x : code) x = pick(rng);
  return tree_from_pruefer(code, n);
}

}  // namespace tuttekit
