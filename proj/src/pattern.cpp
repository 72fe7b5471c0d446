#include "qcp/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "qcp/errors.hpp"
#include "qcp/log.hpp"

namespace qcp {

namespace {
constexpr double kPi = std::numbers::pi;
}

double angle_function(double x, double theta) {
  // For x <= 0 the principal branch is safe: the argument of 1 - e^{x+i theta}
  // stays in the lower half plane. Positive x reflects through the functional
  // equation to dodge overflow and cancellation in e^x.
  if (x > 0) return kPi - theta - angle_function(-x, theta);
  const double ex = std::exp(x);
  return std::atan2(ex * std::sin(theta), 1.0 - ex * std::cos(theta));
}

double angle_function_derivative(double x, double theta) {
  return std::sin(theta) / (2.0 * (std::cosh(x) - std::cos(theta)));
}

double closing_residual(double r0, std::span<const double> neighbor_radii,
                        std::span<const double> angles) {
  if (neighbor_radii.size() != angles.size())
    throw InputError("closing_residual: radius/angle count mismatch");
  if (!(r0 > 0)) throw InputError("closing_residual: center radius must be positive");
  const double u0 = std::log(r0);
  double sum = 0;
  for (size_t j = 0; j < neighbor_radii.size(); ++j) {
    if (!(neighbor_radii[j] > 0)) throw InputError("closing_residual: radii must be positive");
    sum += angle_function(std::log(neighbor_radii[j]) - u0, angles[j]);
  }
  return sum - kPi;
}

double closing_residual_at(const BQuadGraph& g, const Labelling& labels,
                           const RadiusFunction& r, int v) {
  double sum = 0;
  for (const auto& [w, f] : g.white_neighbors[v]) sum += angle_function(std::log(r[w]) - std::log(r[v]), labels[f]);
  return sum - kPi;
}

RadiusFunction invert_radii(const BQuadGraph& g, const RadiusFunction& r) {
  if (r.size() != static_cast<size_t>(g.vertex_count()))
    throw InputError("invert_radii: radius vector size mismatch");
  RadiusFunction out = r;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_white(v)) continue;
    if (!(r[v] > 0)) throw InputError("invert_radii: radius at vertex " + std::to_string(v) + " not positive");
    out[v] = 1.0 / r[v];
  }
  return out;
}

namespace {

struct FaceGeometry {
  Complex p[4];  // positions in face order
};

// Reconstructs all four corners of face f from one known (white, black)
// adjacent pair. iw is the face index (0 or 2) of the known white; the known
// black is either its successor or predecessor in the cycle.
FaceGeometry place_face(const BQuadGraph& g, const Labelling& labels, const RadiusFunction& r,
                        const std::vector<Complex>& pos, int f, int iw, bool black_is_successor) {
  const auto& q = g.faces[f];
  const int vw = q[iw];
  const int vw_other = q[(iw + 2) % 4];
  const double r0 = r[vw], r1 = r[vw_other], alpha = labels[f];
  const double h0 = angle_function(std::log(r1) - std::log(r0), alpha);
  const double diag = std::sqrt(std::max(0.0, r0 * r0 + r1 * r1 - 2 * r0 * r1 * std::cos(alpha)));
  const Complex pw = pos[vw];
  const int ib = black_is_successor ? (iw + 1) % 4 : (iw + 3) % 4;
  const double phi = std::arg(pos[q[ib]] - pw);
  // Interior angle at the white corner spans from the successor-black edge
  // counterclockwise to the predecessor-black edge.
  double phi_succ = black_is_successor ? phi : phi - 2 * h0;
  FaceGeometry out;
  out.p[iw] = pw;
  out.p[(iw + 1) % 4] = pw + std::polar(r0, phi_succ);
  out.p[(iw + 2) % 4] = pw + std::polar(diag, phi_succ + h0);
  out.p[(iw + 3) % 4] = pw + std::polar(r0, phi_succ + 2 * h0);
  return out;
}

}  // namespace

CirclePattern layout_pattern(const BQuadGraph& g, const Labelling& labels,
                             const RadiusFunction& r, const LayoutSeed& seed) {
  if (labels.size() != g.faces.size()) throw InputError("layout_pattern: labelling size mismatch");
  if (r.size() != static_cast<size_t>(g.vertex_count()))
    throw InputError("layout_pattern: radius vector size mismatch");
  if (seed.vertex < 0 || seed.vertex >= g.vertex_count() || !g.is_white(seed.vertex))
    throw InputError("layout_pattern: seed vertex must be a white vertex");
  if (g.face_count() == 0) throw InputError("layout_pattern: graph has no faces");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_white(v) && !(r[v] > 0))
      throw InputError("layout_pattern: radius at white vertex " + std::to_string(v) + " not positive");

  // The development only closes up if the radius system does.
  int worst_v = -1;
  double worst = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_white(v) || g.boundary_vertex[v]) continue;
    double res = std::abs(closing_residual_at(g, labels, r, v));
    if (res > worst) { worst = res; worst_v = v; }
  }
  if (worst >= 1e-9)
    throw NumericError("layout_pattern: closing residual " + std::to_string(worst) +
                       " at white vertex " + std::to_string(worst_v) + " exceeds 1e-9");

  const int nv = g.vertex_count();
  std::vector<Complex> pos(nv);
  std::vector<uint8_t> placed(nv, 0);
  std::vector<uint8_t> face_done(g.face_count(), 0);

  pos[seed.vertex] = seed.center;
  placed[seed.vertex] = 1;
  const int f0 = g.vertex_faces[seed.vertex].front();
  {
    const auto& q = g.faces[f0];
    int iw = (q[0] == seed.vertex) ? 0 : 2;
    int b = q[(iw + 1) % 4];
    pos[b] = seed.center + std::polar(r[seed.vertex], seed.direction);
    placed[b] = 1;
  }

  double worst_mismatch = 0;
  int worst_mismatch_v = -1;
  std::queue<int> queue;
  queue.push(f0);
  std::vector<uint8_t> queued(g.face_count(), 0);
  queued[f0] = 1;
  int faces_left = g.face_count();

  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    if (face_done[f]) continue;
    const auto& q = g.faces[f];

    int iw = -1;
    bool succ = true;
    for (int i : {0, 2}) {
      if (!placed[q[i]]) continue;
      if (placed[q[(i + 1) % 4]]) { iw = i; succ = true; break; }
      if (placed[q[(i + 3) % 4]]) { iw = i; succ = false; break; }
    }
    if (iw < 0) { queued[f] = 0; continue; }  // revisit once a neighbor places an edge

    FaceGeometry geo = place_face(g, labels, r, pos, f, iw, succ);
    const double scale = std::max(1.0, std::abs(r[q[iw]]) + std::abs(r[q[(iw + 2) % 4]]));
    for (int i = 0; i < 4; ++i) {
      int v = q[i];
      if (placed[v]) {
        double d = std::abs(pos[v] - geo.p[i]);
        if (d > worst_mismatch) { worst_mismatch = d; worst_mismatch_v = v; }
        if (d > 1e-8 * scale)
          throw NumericError("layout_pattern: revisited vertex " + std::to_string(v) +
                             " lands " + std::to_string(d) + " away from its earlier position");
      } else {
        pos[v] = geo.p[i];
        placed[v] = 1;
      }
    }
    face_done[f] = 1;
    --faces_left;
    for (int i = 0; i < 4; ++i) {
      int e = g.edge_between(q[i], q[(i + 1) % 4]);
      const auto& edge = g.edges[e];
      for (int nf : {edge.f0, edge.f1}) {
        if (nf >= 0 && !face_done[nf] && !queued[nf]) {
          queued[nf] = 1;
          queue.push(nf);
        }
      }
    }
  }
  if (faces_left > 0)
    throw InputError("layout_pattern: " + std::to_string(faces_left) +
                     " faces unreachable from the seed (disconnected decomposition)");
  log_debug("layout_pattern: worst revisit mismatch " + std::to_string(worst_mismatch) +
            " at vertex " + std::to_string(worst_mismatch_v));

  CirclePattern out;
  out.graph = g;
  out.labels = labels;
  out.pos = std::move(pos);
  out.radius = r;
  return out;
}

namespace {

double interior_angle(const CirclePattern& p, int f, int corner) {
  const auto& q = p.graph.faces[f];
  const Complex v = p.pos[q[corner]];
  const Complex to_next = p.pos[q[(corner + 1) % 4]] - v;
  const Complex to_prev = p.pos[q[(corner + 3) % 4]] - v;
  double a = std::atan2(cross(to_next, to_prev), dot(to_next, to_prev));
  if (a < 0) a += 2 * kPi;
  return a;
}

}  // namespace

PatternReport check_pattern(const CirclePattern& p, const CheckOptions& opts) {
  PatternReport report;
  const BQuadGraph& g = p.graph;

  if (opts.immersed) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_white(v) || g.boundary_vertex[v]) continue;
      double sum = 0;
      for (int f : g.vertex_faces[v]) {
        const auto& q = g.faces[f];
        int corner = (q[0] == v) ? 0 : 2;
        sum += interior_angle(p, f, corner);
      }
      if (std::abs(sum - 2 * kPi) > opts.tol_immersed) report.angle_sums.push_back({v, sum});
    }
  }

  if (opts.closing) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_white(v) || g.boundary_vertex[v]) continue;
      double res = closing_residual_at(g, p.labels, p.radius, v);
      if (std::abs(res) > opts.tol_closing) report.closing.push_back({v, res});
    }
  }

  if (opts.convex) {
    for (int f = 0; f < g.face_count(); ++f) {
      if (!quad_convex_ccw(p.kite(f))) report.nonconvex_faces.push_back(f);
    }
  }

  if (opts.embedded) {
    const int nf = g.face_count();
    std::vector<BBox> boxes(nf);
    std::vector<double> areas(nf);
    double cell = 0;
    for (int f = 0; f < nf; ++f) {
      auto k = p.kite(f);
      boxes[f] = BBox::of(std::span<const Complex>(k.data(), 4));
      areas[f] = std::abs(polygon_area(std::span<const Complex>(k.data(), 4)));
      cell = std::max({cell, boxes[f].xmax - boxes[f].xmin, boxes[f].ymax - boxes[f].ymin});
    }
    if (cell <= 0) cell = 1.0;

    std::unordered_map<uint64_t, std::vector<int>> grid;
    auto cell_key = [](int64_t ix, int64_t iy) {
      return (static_cast<uint64_t>(ix) << 32) ^ static_cast<uint64_t>(static_cast<uint32_t>(iy));
    };
    for (int f = 0; f < nf; ++f) {
      int64_t x0 = static_cast<int64_t>(std::floor(boxes[f].xmin / cell));
      int64_t x1 = static_cast<int64_t>(std::floor(boxes[f].xmax / cell));
      int64_t y0 = static_cast<int64_t>(std::floor(boxes[f].ymin / cell));
      int64_t y1 = static_cast<int64_t>(std::floor(boxes[f].ymax / cell));
      for (int64_t ix = x0; ix <= x1; ++ix)
        for (int64_t iy = y0; iy <= y1; ++iy) grid[cell_key(ix, iy)].push_back(f);
    }

    std::vector<std::pair<int, int>> candidates;
    {
      std::unordered_set<uint64_t> seen;
      for (auto& [key, bucket] : grid) {
        for (size_t i = 0; i < bucket.size(); ++i)
          for (size_t j = i + 1; j < bucket.size(); ++j) {
            int a = std::min(bucket[i], bucket[j]), b = std::max(bucket[i], bucket[j]);
            if (!boxes[a].overlaps(boxes[b])) continue;
            uint64_t pk = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
            if (seen.insert(pk).second) candidates.push_back({a, b});
          }
      }
      std::sort(candidates.begin(), candidates.end());
    }

    const int threads = std::max(1, opts.threads);
    std::vector<std::vector<PatternReport::OverlapViolation>> found(threads);
    auto run_chunk = [&](int tid) {
      const size_t n = candidates.size();
      const size_t lo = n * tid / threads, hi = n * (tid + 1) / threads;
      for (size_t idx = lo; idx < hi; ++idx) {
        auto [a, b] = candidates[idx];
        double overlap = quad_overlap_area(p.kite(a), p.kite(b));
        double limit = opts.overlap_fraction * std::min(areas[a], areas[b]);
        if (overlap > limit) found[tid].push_back({a, b, overlap});
      }
    };
    if (threads == 1) {
      run_chunk(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
      for (auto& t : pool) t.join();
    }
    for (auto& chunk : found)
      report.overlaps.insert(report.overlaps.end(), chunk.begin(), chunk.end());
  }

  return report;
}

}  // namespace qcp
