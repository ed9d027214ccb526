#pragma once

#include <optional>
#include <string>

#include "tuttekit/graph.hpp"
#include "tuttekit/rotation.hpp"

namespace tuttekit {

struct GraphParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedGraph {
  Multigraph graph;
  std::optional<RotationSystem> rotation;
};

// Text format, one directive per line, '#' starts a comment:
//   vertices <n>
//   edge <u> <v> [<weight>]     weight: integer | p/q | symbol name
//   rot <v> <tok> ...           tok: edge id, or id:end for explicit loop ends
// Edges are numbered 0,1,... in file order. Edges sharing a symbol name share
// that symbol for sampling/grouping purposes.
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);
std::string graph_to_text(const Multigraph& g, const RotationSystem* rot = nullptr);

}  // namespace tuttekit
