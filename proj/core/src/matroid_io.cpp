#include "tuttekit/matroid_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tuttekit/graph_io.hpp"

namespace tuttekit {

namespace {

// non-comment, non-blank lines
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) out.push_back(line);
  }
  return out;
}

Rational parse_rational_token(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(tok));
    return Rational(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
  } catch (const std::exception&) {
    throw MatroidParseError("bad rational: " + tok);
  }
}

}  // namespace

RankOracle parse_matroid_text(const std::string& text, const std::string& base_dir) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw MatroidParseError("empty matroid description");
  std::istringstream head(lines[0]);
  std::string kind;
  head >> kind;
  if (kind == "uniform") {
    int r = -1, n = -1;
    if (!(head >> r >> n) || r < 0 || n < 0 || r > n)
      throw MatroidParseError("uniform needs 0 <= r <= n");
    return RankOracle::uniform(r, n);
  }
  if (kind == "graphic") {
    std::string file;
    if (!(head >> file)) throw MatroidParseError("graphic needs a graph file");
    std::filesystem::path p(file);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return RankOracle::graphic(load_graph_file(p.string()).graph);
  }
  if (kind == "linear") {
    std::string field;
    int rows = -1, cols = -1;
    if (!(head >> field >> rows >> cols) || rows < 0 || cols < 0)
      throw MatroidParseError("linear needs: linear <rational|gf2> <rows> <cols>");
    if (static_cast<int>(lines.size()) != 1 + rows)
      throw MatroidParseError("linear expects one line per matrix row");
    if (field == "rational") {
      Matrix<Rational> m(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols)));
      for (int i = 0; i < rows; ++i) {
        std::istringstream row(lines[static_cast<size_t>(1 + i)]);
        std::string tok;
        for (int j = 0; j < cols; ++j) {
          if (!(row >> tok)) throw MatroidParseError("short matrix row");
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] = parse_rational_token(tok);
        }
      }
      return RankOracle::linear_rational(m);
    }
    if (field == "gf2") {
      std::vector<uint64_t> columns(static_cast<size_t>(cols), 0);
      for (int i = 0; i < rows; ++i) {
        std::istringstream row(lines[static_cast<size_t>(1 + i)]);
        for (int j = 0; j < cols; ++j) {
          int bit;
          if (!(row >> bit) || (bit != 0 && bit != 1))
            throw MatroidParseError("gf2 rows are 0/1 entries");
          if (bit) columns[static_cast<size_t>(j)] |= uint64_t(1) << i;
        }
      }
      return RankOracle::linear_gf2(columns, rows);
    }
    throw MatroidParseError("unknown linear field: " + field);
  }
  if (kind == "bases") {
    int n = -1;
    if (!(head >> n) || n < 0 || n > 24) throw MatroidParseError("bases needs ground size <= 24");
    std::vector<uint32_t> bases;
    for (size_t i = 1; i < lines.size(); ++i) {
      std::istringstream row(lines[i]);
      uint32_t mask = 0;
      int el;
      while (row >> el) {
        if (el < 0 || el >= n) throw MatroidParseError("basis element out of range");
        mask |= uint32_t(1) << el;
      }
      bases.push_back(mask);
    }
    if (bases.empty()) throw MatroidParseError("bases list is empty");
    return RankOracle::from_bases(n, bases);
  }
  throw MatroidParseError("unknown matroid kind: " + kind);
}

RankOracle load_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatroidParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matroid_text(buf.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace tuttekit
