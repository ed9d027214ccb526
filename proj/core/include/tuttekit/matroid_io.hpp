#pragma once

#include <string>

#include "tuttekit/matroid.hpp"

namespace tuttekit {

struct MatroidParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format, '#' starts a comment. First non-comment line picks the kind:
//   uniform <r> <n>
//   graphic <graph-file>            path relative to base_dir
//   linear rational <rows> <cols>   followed by <rows> lines of <cols> rationals
//   linear gf2 <rows> <cols>        followed by <rows> lines of <cols> bits
//   bases <ground_size>             followed by one line per basis: element indices
RankOracle parse_matroid_text(const std::string& text, const std::string& base_dir = ".");
RankOracle load_matroid_file(const std::string& path);

}  // namespace tuttekit
