#include "tuttekit/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace tuttekit {

namespace {

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  return true;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
  ParsedGraph out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vertices = false;
  std::vector<std::pair<int, std::vector<std::string>>> rot_lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd)) continue;
    auto fail = [&](const std::string& msg) {
      throw GraphParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (cmd == "vertices") {
      int n;
      if (!(ls >> n) || n < 0) fail("bad vertex count");
      if (have_vertices) fail("duplicate vertices directive");
      out.graph = Multigraph(n);
      have_vertices = true;
    } else if (cmd == "edge") {
      if (!have_vertices) fail("edge before vertices");
      int u, v;
      if (!(ls >> u >> v)) fail("bad edge endpoints");
      if (u < 0 || u >= out.graph.num_vertices() || v < 0 || v >= out.graph.num_vertices())
        fail("edge endpoint out of range");
      std::string wtok;
      EdgeWeight w = EdgeWeight::symbol();
      if (ls >> wtok) {
        if (looks_numeric(wtok)) {
          try {
            w = EdgeWeight::exact(parse_rational(wtok));
          } catch (const std::invalid_argument& e) {
            fail(e.what());
          }
        } else {
          w = EdgeWeight::symbol(wtok);
        }
      }
      out.graph.add_edge(u, v, w);
    } else if (cmd == "rot") {
      int v;
      if (!(ls >> v)) fail("bad rot vertex");
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      rot_lines.emplace_back(v, toks);
    } else {
      fail("unknown directive '" + cmd + "'");
    }
  }
  if (!have_vertices) throw GraphParseError("missing vertices directive");
  if (!rot_lines.empty()) {
    RotationSystem rot;
    rot.at.resize(out.graph.num_vertices());
    std::map<int, int> loop_seen;  // edge id -> occurrences so far
    for (auto& [v, toks] : rot_lines) {
      if (v < 0 || v >= out.graph.num_vertices())
        throw GraphParseError("rot vertex out of range");
      for (auto& tok : toks) {
        int eid, end = -1;
        auto colon = tok.find(':');
        try {
          if (colon == std::string::npos) {
            eid = std::stoi(tok);
          } else {
            eid = std::stoi(tok.substr(0, colon));
            end = std::stoi(tok.substr(colon + 1));
          }
        } catch (const std::exception&) {
          throw GraphParseError("bad rot token '" + tok + "'");
        }
        if (!out.graph.has_edge(eid))
          throw GraphParseError("rot references unknown edge " + std::to_string(eid));
        const Edge& e = out.graph.edge(eid);
        if (end == -1) {
          if (e.is_loop()) {
            end = loop_seen[eid]++;
            if (end > 1) throw GraphParseError("loop edge listed more than twice in rot");
          } else if (e.u == v) {
            end = 0;
          } else if (e.v == v) {
            end = 1;
          } else {
            throw GraphParseError("rot lists edge " + std::to_string(eid) + " at non-incident vertex");
          }
        }
        rot.at[v].push_back(Dart{eid, end});
      }
    }
    rot.validate(out.graph);
    out.rotation = std::move(rot);
  }
  return out;
}

ParsedGraph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GraphParseError("cannot open graph file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph_text(ss.str());
}

std::string graph_to_text(const Multigraph& g, const RotationSystem* rot) {
  std::ostringstream os;
  os << "vertices " << g.num_vertices() << "\n";
  std::vector<Edge> es = g.edges();
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (auto& e : es) {
    os << "edge " << e.u << " " << e.v;
    if (e.w.is_exact()) os << " " << rational_to_string(e.w.value);
    else if (!e.w.name.empty() && e.w.name != "v" + std::to_string(e.id)) os << " " << e.w.name;
    os << "\n";
  }
  if (rot) {
    for (size_t v = 0; v < rot->at.size(); ++v) {
      if (rot->at[v].empty()) continue;
      os << "rot " << v;
      for (const Dart& d : rot->at[v]) os << " " << d.edge << ":" << d.end;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace tuttekit
