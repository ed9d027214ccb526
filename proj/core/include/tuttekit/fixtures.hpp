#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tuttekit/graph.hpp"
#include "tuttekit/rotation.hpp"

namespace tuttekit {

// --- named builders --------------------------------------------------------

Multigraph path_graph(int edges);        // edges+1 vertices in a line
Multigraph star_graph(int leaves);       // hub is vertex 0
Multigraph cycle_graph(int n);           // n >= 1; C_1 is a loop, C_2 a parallel pair
Multigraph complete_graph(int n);        // edges in lexicographic endpoint order
Multigraph wheel_graph(int rim);         // rim >= 3; rim cycle 0..rim-1, hub = rim
// two terminals (0 and 1) joined by `strands` internally disjoint paths of
// `strand_len` edges each
Multigraph theta_graph(int strand_len, int strands);
Multigraph petersen_graph();

// K4 one-edge/two-weight cases (edge masks over complete_graph(4) ids):
//   'a' one edge  'b' disjoint pair  'c' adjacent pair  'd' star  'e' path
uint32_t k4_case_edge_mask(char which);
// complete_graph(4) with symbol "a" on the case edges and "b" elsewhere
Multigraph k4_case_graph(char which);

// --- planar embeddings ------------------------------------------------------

RotationSystem cycle_embedding(int n);      // for cycle_graph(n), n >= 3
RotationSystem k4_embedding();              // for complete_graph(4)
RotationSystem wheel_embedding(int rim);    // for wheel_graph(rim)
RotationSystem loop_embedding();            // one vertex, one loop

// --- fixture registry --------------------------------------------------------

struct NamedFixture {
  std::string name;
  Multigraph graph;
  std::optional<RotationSystem> rotation;
  std::string description;
};

// the graphs referenced by name throughout the test-suite and the CLI
std::vector<NamedFixture> standard_fixtures();
// the five loopless connected series-parallel graphs used by the
// reliability-region sampling suite
std::vector<NamedFixture> series_parallel_fixtures();

// --- corpora ------------------------------------------------------------------

// every labeled multigraph with 1..max_vertices vertices and at most
// max_edges edges (loops and parallel edges included); edge endpoints are
// emitted in a canonical order so the corpus is deterministic
std::vector<Multigraph> all_multigraphs(int max_vertices, int max_edges);

// seeded random multigraphs, <= max_edges edges, <= 6 vertices
std::vector<Multigraph> random_multigraphs(int count, int max_edges, uint64_t seed);

// seeded loopless multigraphs with max degree <= max_degree (edge-end count),
// 2..max_vertices vertices, at least one edge
std::vector<Multigraph> bounded_degree_corpus(int count, int max_degree, int max_vertices,
                                              uint64_t seed);

// all labeled trees on `vertices` vertices (Cayley enumeration via Pruefer
// sequences); vertices <= 6 to keep sizes sane
std::vector<Multigraph> all_labeled_trees(int vertices);
// one random labeled tree with `edges` edges
Multigraph random_tree(int edges, uint64_t seed);

}  // namespace tuttekit
