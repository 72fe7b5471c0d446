#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace qcp {

// Bipartite quadrilateral cell decomposition. White vertices carry circles,
// black vertices carry intersection points; every face is a quadrilateral
// listed counterclockwise starting at a white vertex, colors alternating.
struct BQuadGraph {
  enum class Color : uint8_t { White, Black };

  struct Edge {
    int a = -1, b = -1;    // endpoints, a < b
    int f0 = -1, f1 = -1;  // incident faces, f1 == -1 on the boundary
  };

  std::vector<Color> color;
  std::vector<std::array<int, 4>> faces;

  // Derived (filled by build()):
  std::vector<uint8_t> boundary_vertex;        // has an incident boundary edge
  std::vector<uint8_t> boundary_face;          // has a boundary edge
  std::vector<Edge> edges;
  std::unordered_map<uint64_t, int> edge_ids;  // key(a,b) -> edge index
  std::vector<std::vector<int>> vertex_faces;  // incident faces per vertex
  std::vector<std::vector<int>> vertex_edges;  // incident edges per vertex
  // Adjacency of the white graph: for each white vertex, (other white, face).
  // Faces of the decomposition correspond one-to-one to white-graph edges.
  std::vector<std::vector<std::pair<int, int>>> white_neighbors;

  int vertex_count() const { return static_cast<int>(color.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  bool is_white(int v) const { return color[v] == Color::White; }
  bool is_interior(int v) const { return !boundary_vertex[v]; }

  static uint64_t edge_key(int a, int b);
  int edge_between(int a, int b) const;  // -1 if absent

  // Validates bipartiteness, face structure, and that every edge bounds at
  // most two faces, then fills the derived indices. Throws InputError.
  static BQuadGraph build(std::vector<Color> colors, std::vector<std::array<int, 4>> faces);
};

// Intersection angle per face, in (0, pi).
using Labelling = std::vector<double>;

// Circle radius per vertex; only entries at white vertices are meaningful.
using RadiusFunction = std::vector<double>;

// Returns the interior black vertices whose incident face labels do not sum
// to 2*pi within tol. An admissible labelling returns an empty list.
std::vector<int> check_admissible(const BQuadGraph& g, const Labelling& labels, double tol = 1e-12);

}  // namespace qcp
