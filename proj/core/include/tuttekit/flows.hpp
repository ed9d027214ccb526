#pragma once

#include "tuttekit/graph.hpp"

namespace tuttekit {

// Maximum number of edge-disjoint x-y paths (unit capacity per parallel edge).
int max_flow(const Multigraph& g, int x, int y);

// maxmaxflow: max over vertex pairs of max_flow; 0 when fewer than 2 vertices.
int maxmaxflow(const Multigraph& g);

// min over GF(2) cocycle-space bases of the largest member cardinality,
// found by exhaustive basis enumeration over the star-cocycle coordinates.
// Capped at 6 vertices (the basis count grows with |GL(d,2)|).
int cocycle_lambda_tilde(const Multigraph& g);

}  // namespace tuttekit
