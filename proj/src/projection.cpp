#include "qcp/projection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "qcp/errors.hpp"
#include "qcp/log.hpp"

namespace qcp {

namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kScaleFloor = 1e-9;
// A crossing measure (polygon area or segment length) at most this is a
// clean miss; between this and the degeneracy threshold the geometry is
// ambiguous at double precision.
constexpr double kMissTol = 1e-12;
constexpr double kDegenerateArea = 1e-10;
constexpr double kDegenerateLength = 1e-9;

double vdot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void PlaneSpec::validate() const {
  if (d < 2) throw InputError("plane dimension must be at least 2");
  if (static_cast<int>(u1.size()) != d || static_cast<int>(u2.size()) != d ||
      static_cast<int>(t.size()) != d) {
    throw InputError("plane vectors must all have length d");
  }
  const double n1 = vdot(u1, u1), n2 = vdot(u2, u2), dp = vdot(u1, u2);
  if (std::abs(n1 - 1.0) > kOrthoTol || std::abs(n2 - 1.0) > kOrthoTol)
    throw InputError("plane spanning vectors must be unit length");
  if (std::abs(dp) > kOrthoTol)
    throw InputError("plane spanning vectors must be orthogonal");
}

std::vector<double> projection_scales(const PlaneSpec& plane) {
  plane.validate();
  std::vector<double> c(plane.d);
  for (int j = 0; j < plane.d; ++j) {
    const double len = std::hypot(plane.u1[j], plane.u2[j]);
    if (len <= kScaleFloor)
      throw NumericError("plane is orthogonal to coordinate axis " +
                         std::to_string(j));
    c[j] = 1.0 / len;
  }
  return c;
}

PlaneSpec symmetric_plane(int folds, const std::vector<double>& offset) {
  if (folds < 5 || folds % 2 == 0)
    throw InputError("rotational symmetry requires an odd fold count >= 5");
  if (static_cast<int>(offset.size()) != folds)
    throw InputError("offset vector must have one entry per fold");
  PlaneSpec p;
  p.d = folds;
  p.u1.resize(folds);
  p.u2.resize(folds);
  p.t = offset;
  const double amp = std::sqrt(2.0 / folds);
  for (int j = 0; j < folds; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / folds;
    p.u1[j] = amp * std::cos(phi);
    p.u2[j] = amp * std::sin(phi);
  }
  return p;
}

PlaneSpec symmetric_plane(int folds, double offset) {
  if (folds < 5 || folds % 2 == 0)
    throw InputError("rotational symmetry requires an odd fold count >= 5");
  return symmetric_plane(folds, std::vector<double>(folds, offset));
}

namespace {

// ---------------------------------------------------------------------------
// Cell/facet crossing tests in plane coordinates.
//
// A point of the plane with coordinates z = s + i*w sits at t + s*u1 + w*u2
// in R^d; its j-th ambient coordinate is t_j + dot(n_j, z) where
// n_j = (u1_j, u2_j). The Voronoi cell of the lattice point with integer
// coordinates m is the slab intersection |t_j + dot(n_j,z) - m_j c_j| <=
// c_j/2 over all j.
// ---------------------------------------------------------------------------

struct CellGeometry {
  const PlaneSpec& plane;
  std::vector<double> c;        // scales
  std::vector<Complex> normal;  // n_j = u1_j + i u2_j
  std::vector<Complex> dir;     // a_j = c_j * n_j (unit length)
  double box_half = 0.0;        // clip box half-width in plane coordinates

  CellGeometry(const PlaneSpec& p, double window_radius)
      : plane(p), c(projection_scales(p)) {
    normal.resize(p.d);
    dir.resize(p.d);
    for (int j = 0; j < p.d; ++j) {
      normal[j] = Complex(p.u1[j], p.u2[j]);
      dir[j] = c[j] * normal[j];
    }
    box_half = window_radius + 2.0 * p.d + 2.0;
  }

  // Clip the big box by every slab of the cell with coordinates m; returns
  // the (convex) intersection polygon.
  std::vector<Complex> cell_polygon(const std::vector<int>& m) const {
    std::vector<Complex> poly = {
        Complex(-box_half, -box_half), Complex(box_half, -box_half),
        Complex(box_half, box_half), Complex(-box_half, box_half)};
    for (int j = 0; j < plane.d && !poly.empty(); ++j) {
      const double mid = m[j] * c[j] - plane.t[j];
      poly = clip_slab(poly, normal[j], mid - 0.5 * c[j], mid + 0.5 * c[j]);
    }
    return poly;
  }

  // Keep lo <= dot(n, z) <= hi.
  static std::vector<Complex> clip_slab(std::vector<Complex> poly, Complex n,
                                        double lo, double hi) {
    const Complex tangent(-n.imag(), n.real());
    const double nn = std::norm(n);
    // dot(n,z) <= hi: boundary through (hi/|n|^2)*n along the tangent,
    // keeping the left side of the directed boundary line.
    poly = clip_halfplane(poly, (hi / nn) * n, (hi / nn) * n + tangent);
    if (poly.empty()) return poly;
    poly = clip_halfplane(poly, (lo / nn) * n, (lo / nn) * n - tangent);
    return poly;
  }

  // Length of the plane's intersection with the shared facet between the
  // cells at m and m + e_axis.
  double facet_segment_length(const std::vector<int>& m, int axis) const {
    const Complex n = normal[axis];
    const double b = (m[axis] + 0.5) * c[axis] - plane.t[axis];
    const Complex z0 = (b / std::norm(n)) * n;
    const Complex tau(-n.imag(), n.real());  // |tau| = |n| = 1/c[axis]
    double lam_lo = -1e300, lam_hi = 1e300;
    for (int j = 0; j < plane.d; ++j) {
      if (j == axis) continue;
      const double mid = m[j] * c[j] - plane.t[j];
      const double lo = mid - 0.5 * c[j], hi = mid + 0.5 * c[j];
      const double a = dot(normal[j], z0);
      const double bta = dot(normal[j], tau);
      if (std::abs(bta) < 1e-15) {
        if (a < lo || a > hi) return 0.0;
        continue;
      }
      double l0 = (lo - a) / bta, l1 = (hi - a) / bta;
      if (l0 > l1) std::swap(l0, l1);
      lam_lo = std::max(lam_lo, l0);
      lam_hi = std::min(lam_hi, l1);
      if (lam_lo >= lam_hi) return 0.0;
    }
    return (lam_hi - lam_lo) * std::abs(tau);
  }

  // Projected position of the lattice point with coordinates m, relative to t.
  Complex projected(const std::vector<int>& m) const {
    Complex z = 0.0;
    for (int j = 0; j < plane.d; ++j) z += (m[j] * c[j] - plane.t[j]) * normal[j];
    return z;
  }

  // Squared ambient distance from the lattice point at m to the plane.
  double ambient_dist_sq(const std::vector<int>& m) const {
    double total = 0.0;
    for (int j = 0; j < plane.d; ++j) {
      const double x = m[j] * c[j] - plane.t[j];
      total += x * x;
    }
    const Complex z = projected(m);
    return total - std::norm(z);
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct CellInfo {
  bool crossed = false;
  bool in_window = false;
  int vertex = -1;  // id once kept in the graph
  Complex z;        // projected position relative to t
};

// Planar half-edge traversal state.
struct HalfEdges {
  // adjacency[v] = neighbors sorted counterclockwise by direction angle
  std::vector<std::vector<int>> adjacency;

  // Successor of the half-edge u -> v around its left face: the neighbor of
  // v one step clockwise from u in v's counterclockwise neighbor ring.
  int next_around_face(int u, int v) const {
    const auto& nb = adjacency[v];
    int idx = -1;
    for (int i = 0; i < static_cast<int>(nb.size()); ++i)
      if (nb[i] == u) { idx = i; break; }
    if (idx < 0) throw NumericError("half-edge traversal lost its way");
    const int n = static_cast<int>(nb.size());
    return nb[(idx + n - 1) % n];
  }
};

bool is_unit_step(const std::vector<int>& a, const std::vector<int>& b,
                  int* axis, int* sign) {
  int ax = -1, sg = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int diff = b[j] - a[j];
    if (diff == 0) continue;
    if (std::abs(diff) != 1 || ax >= 0) return false;
    ax = static_cast<int>(j);
    sg = diff;
  }
  if (ax < 0) return false;
  if (axis) *axis = ax;
  if (sign) *sign = sg;
  return true;
}

int coord_parity(const std::vector<int>& m) {
  long s = 0;
  for (int x : m) s += x;
  return static_cast<int>(((s % 2) + 2) % 2);
}

}  // namespace

LiftedEmbedding generate_embedding(const PlaneSpec& plane,
                                   double window_radius) {
  plane.validate();
  if (!(window_radius > 2.0))
    throw InputError("window radius must exceed 2");
  const int d = plane.d;
  CellGeometry geom(plane, window_radius);

  // Reject planes containing whole lattice segments: the cell construction
  // degenerates because the plane runs inside facet walls.
  {
    int in_plane = 0;
    for (int j = 0; j < d; ++j) {
      // e_j lies in the plane iff its projection has full length c_j^-1 = 1.
      const double proj_sq = plane.u1[j] * plane.u1[j] +
                             plane.u2[j] * plane.u2[j];
      if (proj_sq >= 1.0 - 1e-12) ++in_plane;
    }
    if (d == 2) {
      // The plane is all of R^2; both axes lie inside it and the
      // construction reduces to the ordinary square grid, which is fine.
    } else if (in_plane >= 2) {
      throw DegeneracyError(
          "plane contains two lattice directions; use the direct d=2 grid "
          "construction instead");
    } else if (in_plane == 1) {
      throw DegeneracyError(
          "plane contains a lattice direction; the cell construction "
          "degenerates (perturb the plane)");
    }
  }

  // Reject an offset sitting on a Voronoi wall.
  for (int j = 0; j < d; ++j) {
    const double frac = plane.t[j] / geom.c[j];
    const double dist_to_wall = std::abs(frac - std::floor(frac) - 0.5);
    if (dist_to_wall < 1e-9)
      throw DegeneracyError(
          "offset lies on a Voronoi cell wall (perturb the offset)");
  }

  // ---- breadth-first cell acceptance ---------------------------------------
  const double slack = window_radius + d;  // covers cells leaning outward
  std::unordered_map<std::vector<int>, CellInfo, VecHash> cells;
  std::deque<std::vector<int>> queue;

  auto classify = [&](const std::vector<int>& m) -> CellInfo& {
    auto it = cells.find(m);
    if (it != cells.end()) return it->second;
    CellInfo info;
    info.z = geom.projected(m);
    if (std::abs(info.z) <= slack) {
      const auto poly = geom.cell_polygon(m);
      const double area = std::abs(polygon_area(poly));
      if (area > kMissTol && area < kDegenerateArea)
        throw DegeneracyError(
            "plane grazes a Voronoi cell (perturb the offset)");
      info.crossed = area >= kDegenerateArea;
    }
    info.in_window = info.crossed && std::abs(info.z) < window_radius;
    return cells.emplace(m, info).first->second;
  };

  std::vector<int> seed(d);
  for (int j = 0; j < d; ++j)
    seed[j] = static_cast<int>(std::lround(plane.t[j] / geom.c[j]));
  if (!classify(seed).crossed)
    throw NumericError("seed cell is not crossed by the plane");
  queue.push_back(seed);

  std::vector<std::vector<int>> accepted;  // BFS order, crossed & within slack
  std::unordered_set<std::vector<int>, VecHash> enqueued;
  enqueued.insert(seed);
  while (!queue.empty()) {
    std::vector<int> m = queue.front();
    queue.pop_front();
    if (!classify(m).crossed) continue;
    accepted.push_back(m);
    for (int j = 0; j < d; ++j) {
      for (int sg : {+1, -1}) {
        std::vector<int> nb = m;
        nb[j] += sg;
        if (enqueued.count(nb)) continue;
        CellInfo& info = classify(nb);
        if (info.crossed) {
          enqueued.insert(nb);
          queue.push_back(nb);
        }
      }
    }
    if (accepted.size() > 20000000u)
      throw NumericError("window produced an unreasonable number of cells");
  }

  // ---- vertices ------------------------------------------------------------
  std::vector<std::vector<int>> vertex_coords;  // absolute lattice coords
  for (const auto& m : accepted) {
    CellInfo& info = cells.at(m);
    if (!info.in_window) continue;
    info.vertex = static_cast<int>(vertex_coords.size());
    vertex_coords.push_back(m);
  }
  if (vertex_coords.empty())
    throw InputError("window contains no lattice vertices; enlarge it");

  auto rebased = [&](const std::vector<int>& m) {
    std::vector<int> r(d);
    for (int j = 0; j < d; ++j) r[j] = m[j] - seed[j];
    return r;
  };
  auto position_of = [&](const std::vector<int>& m) {
    Complex p = 0.0;
    for (int j = 0; j < d; ++j)
      p += static_cast<double>(m[j] - seed[j]) * geom.dir[j];
    return p;
  };

  std::vector<Complex> pos(vertex_coords.size());
  for (std::size_t i = 0; i < vertex_coords.size(); ++i)
    pos[i] = position_of(vertex_coords[i]);

  // ---- edges ---------------------------------------------------------------
  std::vector<std::pair<int, int>> edge_list;
  for (std::size_t i = 0; i < vertex_coords.size(); ++i) {
    const auto& m = vertex_coords[i];
    for (int j = 0; j < d; ++j) {
      std::vector<int> nb = m;
      nb[j] += 1;
      auto it = cells.find(nb);
      if (it == cells.end() || it->second.vertex < 0) continue;
      const double len = geom.facet_segment_length(m, j);
      if (len <= kMissTol) continue;
      if (len < kDegenerateLength)
        throw DegeneracyError(
            "plane grazes a cell facet (perturb the offset)");
      edge_list.emplace_back(static_cast<int>(i), it->second.vertex);
    }
  }
  if (edge_list.empty())
    throw InputError("window contains no lattice edges; enlarge it");

  // ---- faces by planar traversal ------------------------------------------
  HalfEdges he;
  he.adjacency.resize(vertex_coords.size());
  for (auto [a, b] : edge_list) {
    he.adjacency[a].push_back(b);
    he.adjacency[b].push_back(a);
  }
  for (std::size_t v = 0; v < he.adjacency.size(); ++v) {
    auto& nb = he.adjacency[v];
    std::sort(nb.begin(), nb.end(), [&](int p, int q) {
      const Complex dp = pos[p] - pos[v], dq = pos[q] - pos[v];
      const double ap = std::atan2(dp.imag(), dp.real());
      const double aq = std::atan2(dq.imag(), dq.real());
      if (ap != aq) return ap < aq;
      return p < q;
    });
  }

  std::unordered_set<std::uint64_t> visited;
  auto he_key = [](int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  };

  struct RawFace {
    std::vector<int> cycle;  // vertex ids, counterclockwise
  };
  std::vector<RawFace> quads, hexes;

  std::vector<std::pair<int, int>> all_half;
  for (auto [a, b] : edge_list) {
    all_half.emplace_back(a, b);
    all_half.emplace_back(b, a);
  }
  std::sort(all_half.begin(), all_half.end());

  for (auto [su, sv] : all_half) {
    if (visited.count(he_key(su, sv))) continue;
    std::vector<int> cycle;
    int u = su, v = sv;
    bool bad = false;
    while (true) {
      visited.insert(he_key(u, v));
      cycle.push_back(u);
      const int w = he.next_around_face(u, v);
      u = v;
      v = w;
      if (u == su && v == sv) break;
      if (cycle.size() > 64) { bad = true; break; }
    }
    if (bad) continue;  // outer face or a rim artifact
    std::vector<Complex> poly;
    poly.reserve(cycle.size());
    for (int id : cycle) poly.push_back(pos[id]);
    if (polygon_area(poly) <= 0.0) continue;  // outer face
    std::unordered_set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) continue;  // pinched rim artifact

    // Genuine faces step along unit lattice vectors and stay on a unit box.
    bool unit_steps = true;
    std::vector<int> axes_lo(d, 1 << 30), axes_hi(d, -(1 << 30));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto& a = vertex_coords[cycle[i]];
      const auto& b = vertex_coords[cycle[(i + 1) % cycle.size()]];
      if (!is_unit_step(a, b, nullptr, nullptr)) { unit_steps = false; break; }
      for (int j = 0; j < d; ++j) {
        axes_lo[j] = std::min(axes_lo[j], a[j]);
        axes_hi[j] = std::max(axes_hi[j], a[j]);
      }
    }
    if (!unit_steps) continue;
    int varying = 0;
    bool on_unit_box = true;
    for (int j = 0; j < d; ++j) {
      const int span = axes_hi[j] - axes_lo[j];
      if (span == 0) continue;
      if (span > 1) { on_unit_box = false; break; }
      ++varying;
    }
    if (!on_unit_box) continue;  // rim artifact

    if (cycle.size() == 4 && varying == 2) {
      quads.push_back({cycle});
    } else if (cycle.size() == 6 && varying == 3) {
      hexes.push_back({cycle});
    } else if (cycle.size() >= 8 && varying == static_cast<int>(cycle.size()) / 2) {
      throw DegeneracyError(
          "plane meets a lattice point of codimension four or higher; "
          "perturb the offset");
    }
    // Anything else is a rim artifact and carries no face.
  }

  // ---- split degree-6 faces at the nearer cube corner ----------------------
  std::unordered_map<std::vector<int>, int, VecHash> extra_vertex;
  std::vector<std::array<int, 4>> face_cycles;  // will become graph faces

  for (const auto& f : quads) {
    face_cycles.push_back({f.cycle[0], f.cycle[1], f.cycle[2], f.cycle[3]});
  }

  for (const auto& f : hexes) {
    // Identify the three varying axes and the 3-cube base.
    std::vector<int> base(vertex_coords[f.cycle[0]]);
    std::vector<int> axes;
    for (int j = 0; j < d; ++j) {
      int lo = base[j], hi = base[j];
      for (int id : f.cycle) {
        lo = std::min(lo, vertex_coords[id][j]);
        hi = std::max(hi, vertex_coords[id][j]);
      }
      base[j] = lo;
      if (hi != lo) axes.push_back(j);
    }
    // The two cube corners absent from the cycle.
    std::vector<std::vector<int>> missing;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> corner = base;
      for (int b = 0; b < 3; ++b)
        if (mask & (1 << b)) corner[axes[b]] += 1;
      bool present = false;
      for (int id : f.cycle)
        if (vertex_coords[id] == corner) { present = true; break; }
      if (!present) missing.push_back(corner);
    }
    if (missing.size() != 2)
      throw NumericError("degree-6 face does not sit on a unit cube");
    std::sort(missing.begin(), missing.end());
    const double d0 = geom.ambient_dist_sq(missing[0]);
    const double d1 = geom.ambient_dist_sq(missing[1]);
    const std::vector<int>& corner =
        (d0 < d1 - 1e-12) ? missing[0]
        : (d1 < d0 - 1e-12) ? missing[1]
                            : missing[0];  // tie: lexicographically smaller
    const Complex corner_z = geom.projected(corner);
    if (std::abs(corner_z) >= window_radius) continue;  // rim: drop the face

    int cid;
    auto it = extra_vertex.find(corner);
    if (it != extra_vertex.end()) {
      cid = it->second;
    } else {
      cid = static_cast<int>(vertex_coords.size());
      vertex_coords.push_back(corner);
      pos.push_back(position_of(corner));
      extra_vertex.emplace(corner, cid);
    }

    // Cycle slots adjacent to the corner (lattice distance one) alternate.
    int first = -1;
    for (int i = 0; i < 6; ++i) {
      if (is_unit_step(vertex_coords[f.cycle[i]], corner, nullptr, nullptr)) {
        first = i;
        break;
      }
    }
    if (first < 0) throw NumericError("degree-6 split found no anchor");
    for (int kq = 0; kq < 3; ++kq) {
      const int i = (first + 2 * kq) % 6;
      face_cycles.push_back({cid, f.cycle[i], f.cycle[(i + 1) % 6],
                             f.cycle[(i + 2) % 6]});
    }
  }

  if (face_cycles.empty())
    throw InputError("window contains no faces; enlarge it");

  // ---- prune vertices without faces and assemble the graph -----------------
  std::vector<int> remap(vertex_coords.size(), -1);
  for (const auto& fc : face_cycles)
    for (int id : fc) remap[id] = 0;
  int next_id = 0;
  for (std::size_t i = 0; i < remap.size(); ++i)
    if (remap[i] == 0) remap[i] = next_id++;
    else remap[i] = -1;

  LiftedEmbedding emb;
  emb.scales = geom.c;
  emb.directions = geom.dir;
  emb.pos.resize(next_id);
  emb.coords.resize(next_id);
  for (std::size_t i = 0; i < vertex_coords.size(); ++i) {
    if (remap[i] < 0) continue;
    emb.pos[remap[i]] = pos[i];
    emb.coords[remap[i]] = rebased(vertex_coords[i]);
  }

  std::vector<BQuadGraph::Color> colors(next_id);
  for (int i = 0; i < next_id; ++i)
    colors[i] = coord_parity(emb.coords[i]) == 0 ? BQuadGraph::Color::White
                                                 : BQuadGraph::Color::Black;

  std::vector<std::array<int, 4>> graph_faces;
  graph_faces.reserve(face_cycles.size());
  for (const auto& fc : face_cycles) {
    std::array<int, 4> face;
    for (int k = 0; k < 4; ++k) face[k] = remap[fc[k]];
    // Rotate so the cycle starts at a white vertex.
    if (colors[face[0]] != BQuadGraph::Color::White)
      face = {face[1], face[2], face[3], face[0]};
    graph_faces.push_back(face);
  }

  const auto seed_cell = cells.find(seed);
  if (seed_cell == cells.end() || seed_cell->second.vertex < 0 ||
      remap[seed_cell->second.vertex] < 0)
    throw InputError("window too small: the seed vertex has no faces");
  emb.seed_vertex = remap[seed_cell->second.vertex];

  emb.graph = BQuadGraph::build(std::move(colors), std::move(graph_faces));
  log_info("generated embedding: " + std::to_string(emb.graph.vertex_count()) +
           " vertices, " + std::to_string(emb.graph.faces.size()) + " faces");
  return emb;
}

LiftedEmbedding rhombic_grid(Complex a1, Complex a2, int sum_max) {
  if (sum_max < 2) throw InputError("grid needs sum_max >= 2");
  if (cross(a1, a2) <= 0.0)
    throw InputError("grid directions must be positively oriented");
  if (std::abs(std::abs(a1) - 1.0) > 1e-9 || std::abs(std::abs(a2) - 1.0) > 1e-9)
    throw InputError("grid directions must be unit length");

  LiftedEmbedding emb;
  emb.scales = {1.0, 1.0};
  emb.directions = {a1, a2};

  std::vector<BQuadGraph::Color> colors;
  std::vector<std::array<int, 4>> faces;
  std::map<std::pair<int, int>, int> id_of;
  auto vertex = [&](int n1, int n2) {
    auto [it, fresh] = id_of.try_emplace({n1, n2},
                                         static_cast<int>(emb.pos.size()));
    if (fresh) {
      emb.pos.push_back(static_cast<double>(n1) * a1 +
                        static_cast<double>(n2) * a2);
      emb.coords.push_back({n1, n2});
      colors.push_back((n1 + n2) % 2 == 0 ? BQuadGraph::Color::White
                                          : BQuadGraph::Color::Black);
    }
    return it->second;
  };

  emb.seed_vertex = vertex(0, 0);
  for (int n1 = 0; n1 + 2 <= sum_max; ++n1) {
    for (int n2 = 0; n1 + n2 + 2 <= sum_max; ++n2) {
      const int v00 = vertex(n1, n2), v10 = vertex(n1 + 1, n2);
      const int v11 = vertex(n1 + 1, n2 + 1), v01 = vertex(n1, n2 + 1);
      std::array<int, 4> face = {v00, v10, v11, v01};
      if ((n1 + n2) % 2 != 0) face = {v10, v11, v01, v00};
      faces.push_back(face);
    }
  }
  emb.graph = BQuadGraph::build(std::move(colors), std::move(faces));
  return emb;
}

Labelling embedding_labelling(const LiftedEmbedding& emb) {
  Labelling labels(emb.graph.faces.size());
  for (std::size_t f = 0; f < emb.graph.faces.size(); ++f) {
    const auto& face = emb.graph.faces[f];
    const Complex e1 = emb.pos[face[0]] - emb.pos[face[1]];
    const Complex e2 = emb.pos[face[2]] - emb.pos[face[1]];
    const double ang = std::atan2(cross(e1, e2), dot(e1, e2));
    if (!(ang > 0.0 && ang < std::numbers::pi))
      throw NumericError("face " + std::to_string(f) +
                         " is degenerate or misoriented");
    labels[f] = ang;
  }
  return labels;
}

CirclePattern isoradial_pattern(const LiftedEmbedding& emb) {
  CirclePattern pattern;
  pattern.graph = emb.graph;
  pattern.labels = embedding_labelling(emb);
  pattern.pos = emb.pos;
  pattern.radius.assign(emb.graph.vertex_count(), 0.0);
  for (int v = 0; v < emb.graph.vertex_count(); ++v)
    if (emb.graph.is_white(v)) pattern.radius[v] = 1.0;
  return pattern;
}

}  // namespace qcp
