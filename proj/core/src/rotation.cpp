#include "tuttekit/rotation.hpp"

#include <algorithm>
#include <map>

namespace tuttekit {

void RotationSystem::validate(const Multigraph& g) const {
  if (static_cast<int>(at.size()) != g.num_vertices())
    throw std::invalid_argument("rotation system: wrong vertex count");
  std::map<std::pair<int, int>, int> seen;  // (edge id, end) -> count
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const Dart& d : at[v]) {
      const Edge& e = g.edge(d.edge);
      if (d.end != 0 && d.end != 1) throw std::invalid_argument("rotation system: bad end");
      if (e.endpoint(d.end) != v)
        throw std::invalid_argument("rotation system: dart listed at wrong vertex");
      if (++seen[{d.edge, d.end}] > 1)
        throw std::invalid_argument("rotation system: duplicate dart");
    }
  }
  if (static_cast<int>(seen.size()) != 2 * g.num_edges())
    throw std::invalid_argument("rotation system: missing darts");
}

PlanarDualResult planar_dual(const Multigraph& g, const RotationSystem& rot) {
  if (!g.connected())
    throw NonPlanarEmbeddingError("planar_dual: graph must be connected");
  rot.validate(g);

  // dense dart index: dart position within concatenated rotation lists
  std::map<std::pair<int, int>, std::pair<int, int>> where;  // (edge,end) -> (vertex, pos)
  for (int v = 0; v < g.num_vertices(); ++v)
    for (size_t i = 0; i < rot.at[v].size(); ++i)
      where[{rot.at[v][i].edge, rot.at[v][i].end}] = {v, static_cast<int>(i)};

  auto next_in_face = [&](Dart d) -> Dart {
    // cross to the other side of the edge, then take the rotation successor there
    Dart rev{d.edge, 1 - d.end};
    auto [v, pos] = where.at({rev.edge, rev.end});
    const auto& ring = rot.at[v];
    return ring[(pos + 1) % ring.size()];
  };

  // trace faces as orbits
  std::map<std::pair<int, int>, int> face_of;
  std::vector<std::vector<Dart>> face_darts;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const Dart& d0 : rot.at[v]) {
      if (face_of.count({d0.edge, d0.end})) continue;
      int f = static_cast<int>(face_darts.size());
      face_darts.emplace_back();
      Dart d = d0;
      do {
        face_of[{d.edge, d.end}] = f;
        face_darts[f].push_back(d);
        d = next_in_face(d);
      } while (!(d == d0));
    }
  }
  int F = static_cast<int>(face_darts.size());
  if (g.num_vertices() - g.num_edges() + F != 2)
    throw NonPlanarEmbeddingError(
        "planar_dual: Euler check failed (V-E+F = " +
        std::to_string(g.num_vertices() - g.num_edges() + F) + "), embedding is not planar");

  PlanarDualResult out;
  out.num_faces = F;
  Multigraph dual(F);
  // recreate edges in primal id order so dual ids match primal ids
  std::vector<Edge> es = g.edges();
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  int max_id = es.empty() ? 0 : es.back().id + 1;
  out.side_faces.assign(max_id, {-1, -1});
  // which end of the dual edge sits in which face, keyed by primal dart
  std::map<std::pair<int, int>, Dart> dual_dart_for;
  for (const Edge& e : es) {
    int f0 = face_of.at({e.id, 0});
    int f1 = face_of.at({e.id, 1});
    dual.add_edge_with_id(e.id, f0, f1, e.w);
    out.side_faces[e.id] = {f0, f1};
    dual_dart_for[{e.id, 0}] = Dart{e.id, 0};
    dual_dart_for[{e.id, 1}] = Dart{e.id, 1};
  }

  // induced dual rotation: around each face, darts in face-trace order
  RotationSystem drot;
  drot.at.resize(F);
  for (int f = 0; f < F; ++f)
    for (const Dart& d : face_darts[f]) drot.at[f].push_back(dual_dart_for.at({d.edge, d.end}));
  out.dual = std::move(dual);
  out.dual_rot = std::move(drot);
  return out;
}

}  // namespace tuttekit
