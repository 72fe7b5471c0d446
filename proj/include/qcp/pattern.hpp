#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qcp/geom.hpp"
#include "qcp/graph.hpp"

namespace qcp {

// Half-angle at a circle center inside a kite: for circles of radii r0, r
// meeting at exterior angle theta, the kite's angle at the r0-center is
// 2 * angle_function(log r - log r0, theta). Strictly increasing in x with
// values in (0, pi), and angle_function(x) + angle_function(-x) = pi - theta.
double angle_function(double x, double theta);

// d/dx of angle_function: sin(theta) / (2 (cosh x - cos theta)).
double angle_function_derivative(double x, double theta);

// Sum of kite half-angles around a circle of radius r0 minus pi. Zero at
// every interior white vertex characterizes a valid radius function.
double closing_residual(double r0, std::span<const double> neighbor_radii,
                        std::span<const double> angles);

// Residual of the radius function at one interior white vertex of the graph.
double closing_residual_at(const BQuadGraph& g, const Labelling& labels,
                           const RadiusFunction& r, int v);

// Reciprocal radius function (entries at black vertices are copied as-is).
RadiusFunction invert_radii(const BQuadGraph& g, const RadiusFunction& r);

struct CirclePattern {
  BQuadGraph graph;
  Labelling labels;
  std::vector<Complex> pos;  // every vertex: centers at whites, touch points at blacks
  RadiusFunction radius;     // meaningful at whites

  std::array<Complex, 4> kite(int f) const {
    const auto& q = graph.faces[f];
    return {pos[q[0]], pos[q[1]], pos[q[2]], pos[q[3]]};
  }
};

struct LayoutSeed {
  int vertex = 0;           // white vertex to pin
  Complex center{0, 0};     // its circle center
  double direction = 0;     // argument of the edge toward the face-successor black
};

// Develops the pattern geometry face by face from the seed. Requires the
// closing residual to vanish (|.| < 1e-9) at every interior white vertex and
// asserts that revisited vertices land on their earlier positions to 1e-8.
CirclePattern layout_pattern(const BQuadGraph& g, const Labelling& labels,
                             const RadiusFunction& r, const LayoutSeed& seed);

struct CheckOptions {
  bool immersed = true;
  bool embedded = false;
  bool convex = false;
  bool closing = false;
  double tol_immersed = 1e-8;
  double tol_closing = 1e-9;
  double overlap_fraction = 1e-10;  // of the smaller kite's area
  int threads = 1;
};

struct PatternReport {
  struct AngleSumViolation { int vertex; double sum; };
  struct OverlapViolation { int face_a; int face_b; double area; };
  std::vector<AngleSumViolation> angle_sums;
  std::vector<OverlapViolation> overlaps;
  std::vector<int> nonconvex_faces;
  std::vector<AngleSumViolation> closing;  // vertex + residual

  bool ok() const {
    return angle_sums.empty() && overlaps.empty() && nonconvex_faces.empty() && closing.empty();
  }
};

// Immersion (kite angle sums = 2*pi at interior whites and blacks), pairwise
// interior-disjointness (spatial hash broad phase, polygon clipping narrow
// phase), per-kite convexity, and the closing residual, as requested.
PatternReport check_pattern(const CirclePattern& p, const CheckOptions& opts);

}  // namespace qcp
