#pragma once

#include <vector>

#include "tuttekit/graph.hpp"
#include "tuttekit/linalg.hpp"
#include "tuttekit/multiaffine.hpp"

namespace tuttekit {

// directed vertex-edge incidence matrix for an arbitrary fixed orientation
// (u -> +1, v -> -1); loop columns are zero
std::vector<std::vector<int>> directed_incidence(const Multigraph& g);

// L = B diag(x) B^T: diagonal = sum of incident non-loop weights,
// off-diagonal (i,j) = -sum of weights of edges joining i and j
Matrix<MultiAffinePoly> weighted_laplacian(const Multigraph& g);

// det of the Laplacian with the root row/column removed: the spanning tree
// polynomial. Disconnected graphs give 0.
MultiAffinePoly matrix_tree(const Multigraph& g, int root);

// det of the Laplacian with all root rows/columns removed: spanning forests
// with exactly one root per tree
MultiAffinePoly rooted_forest_minor(const Multigraph& g, const std::vector<int>& roots);

// direct enumeration of the same forest family, for cross-checking
MultiAffinePoly rooted_forest_enumeration(const Multigraph& g, const std::vector<int>& roots);

// Y_ij = T_G(x) / T_{G/ij}(x)
PolyFraction effective_conductance(const Multigraph& g, int i, int j);

}  // namespace tuttekit
