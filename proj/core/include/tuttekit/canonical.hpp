#pragma once

#include <functional>
#include <string>

#include "tuttekit/graph.hpp"

namespace tuttekit {

// Cache key that is equal for two graphs only if they are isomorphic with
// matching edge keys. Iterated degree refinement colors the vertices; within
// refinement classes all permutations are tried for the lexicographically
// minimal encoding, as long as the class-size factorial product stays within
// perm_budget. Beyond the budget the literal (identity order) encoding is
// used, which can only cost cache hits, never correctness.
std::string canonical_graph_key(const Multigraph& g,
                                const std::function<std::string(const Edge&)>& edge_key,
                                long perm_budget = 10080);

// default edge key: the weight key
std::string canonical_graph_key(const Multigraph& g, long perm_budget = 10080);

}  // namespace tuttekit
