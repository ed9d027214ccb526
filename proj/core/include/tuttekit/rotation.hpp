#pragma once

#include <stdexcept>
#include <vector>

#include "tuttekit/graph.hpp"

namespace tuttekit {

struct NonPlanarEmbeddingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-edge: side `end` of the edge (0 = at edge.u, 1 = at edge.v).
struct Dart {
  int edge;
  int end;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Cyclic order of incident darts at each vertex (a combinatorial embedding).
// Loops contribute both their darts to the same vertex list.
struct RotationSystem {
  std::vector<std::vector<Dart>> at;

  // throws std::invalid_argument unless every dart appears exactly once at
  // the right vertex
  void validate(const Multigraph& g) const;
};

struct PlanarDualResult {
  Multigraph dual;          // one vertex per face; edge ids equal the primal ids
  RotationSystem dual_rot;  // induced embedding of the dual
  int num_faces = 0;
  // face index on each side of every primal edge, indexed by edge id
  std::vector<std::pair<int, int>> side_faces;
};

// Face-traces the embedding and checks Euler's relation |V| - |E| + F = 2
// (throws NonPlanarEmbeddingError otherwise; input must be connected).
// Dual edges keep the primal edge ids and weights.
PlanarDualResult planar_dual(const Multigraph& g, const RotationSystem& rot);

}  // namespace tuttekit
