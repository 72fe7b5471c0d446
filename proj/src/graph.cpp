#include "qcp/graph.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcp/errors.hpp"

namespace qcp {

uint64_t BQuadGraph::edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

int BQuadGraph::edge_between(int a, int b) const {
  auto it = edge_ids.find(edge_key(a, b));
  return it == edge_ids.end() ? -1 : it->second;
}

BQuadGraph BQuadGraph::build(std::vector<Color> colors, std::vector<std::array<int, 4>> face_list) {
  BQuadGraph g;
  g.color = std::move(colors);
  g.faces = std::move(face_list);
  const int nv = g.vertex_count();

  for (size_t f = 0; f < g.faces.size(); ++f) {
    const auto& q = g.faces[f];
    for (int i = 0; i < 4; ++i) {
      if (q[i] < 0 || q[i] >= nv)
        throw InputError("face " + std::to_string(f) + " references missing vertex " + std::to_string(q[i]));
      for (int j = i + 1; j < 4; ++j)
        if (q[i] == q[j]) throw InputError("face " + std::to_string(f) + " repeats vertex " + std::to_string(q[i]));
    }
    if (g.color[q[0]] != Color::White || g.color[q[2]] != Color::White ||
        g.color[q[1]] != Color::Black || g.color[q[3]] != Color::Black)
      throw InputError("face " + std::to_string(f) + " does not alternate white/black starting white");
  }

  g.vertex_faces.assign(nv, {});
  g.vertex_edges.assign(nv, {});
  for (size_t f = 0; f < g.faces.size(); ++f) {
    const auto& q = g.faces[f];
    for (int i = 0; i < 4; ++i) {
      g.vertex_faces[q[i]].push_back(static_cast<int>(f));
      int a = q[i], b = q[(i + 1) % 4];
      uint64_t key = edge_key(a, b);
      auto it = g.edge_ids.find(key);
      if (it == g.edge_ids.end()) {
        Edge e;
        e.a = std::min(a, b);
        e.b = std::max(a, b);
        e.f0 = static_cast<int>(f);
        g.edge_ids.emplace(key, static_cast<int>(g.edges.size()));
        g.edges.push_back(e);
      } else {
        Edge& e = g.edges[it->second];
        if (e.f1 != -1)
          throw InputError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                           ") bounds more than two faces");
        e.f1 = static_cast<int>(f);
      }
    }
  }
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    const Edge& e = g.edges[ei];
    g.vertex_edges[e.a].push_back(static_cast<int>(ei));
    g.vertex_edges[e.b].push_back(static_cast<int>(ei));
  }

  g.boundary_vertex.assign(nv, 0);
  g.boundary_face.assign(g.faces.size(), 0);
  for (const Edge& e : g.edges) {
    if (e.f1 == -1) {
      g.boundary_vertex[e.a] = 1;
      g.boundary_vertex[e.b] = 1;
      g.boundary_face[e.f0] = 1;
    }
  }

  // Interior vertices must have a single closed cycle of faces: the number of
  // incident faces equals the number of incident edges, with all edges interior.
  for (int v = 0; v < nv; ++v) {
    if (g.boundary_vertex[v]) continue;
    if (g.vertex_faces[v].size() != g.vertex_edges[v].size())
      throw InputError("interior vertex " + std::to_string(v) + " has a pinched face link");
  }

  g.white_neighbors.assign(nv, {});
  for (size_t f = 0; f < g.faces.size(); ++f) {
    int w0 = g.faces[f][0], w1 = g.faces[f][2];
    g.white_neighbors[w0].push_back({w1, static_cast<int>(f)});
    g.white_neighbors[w1].push_back({w0, static_cast<int>(f)});
  }
  return g;
}

std::vector<int> check_admissible(const BQuadGraph& g, const Labelling& labels, double tol) {
  if (labels.size() != g.faces.size())
    throw InputError("labelling has " + std::to_string(labels.size()) + " entries for " +
                     std::to_string(g.faces.size()) + " faces");
  for (size_t f = 0; f < labels.size(); ++f)
    if (!(labels[f] > 0.0 && labels[f] < std::numbers::pi))
      throw InputError("face label " + std::to_string(f) + " outside (0, pi)");

  std::vector<int> bad;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_white(v) || g.boundary_vertex[v]) continue;
    double sum = 0;
    for (int f : g.vertex_faces[v]) sum += labels[f];
    if (std::abs(sum - 2 * std::numbers::pi) > tol) bad.push_back(v);
  }
  return bad;
}

}  // namespace qcp
