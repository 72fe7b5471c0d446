#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcp/geom.hpp"
#include "qcp/lattice.hpp"
#include "qcp/pattern.hpp"
#include "qcp/projection.hpp"
#include "qcp/surface.hpp"

namespace qcp {

// The 2d rays +-a_k of a direction family, sorted counterclockwise starting
// at +a_1, with a continuous argument lift theta along the cycle. Opposite
// rays sit d slots apart, so theta(slot m + d) = theta(slot m) + pi.
struct EdgeDirectionSet {
  std::vector<Complex> dirs;        // a_1..a_d as given
  std::vector<int> order;           // slot -> signed 1-based axis index
  std::vector<double> theta;        // slot -> lifted argument
  std::vector<double> plus_theta;   // per axis: theta of the +a_k ray
  std::vector<double> minus_theta;  // per axis: theta of the -a_k ray

  int d() const { return static_cast<int>(dirs.size()); }
  double theta_plus(int axis) const { return plus_theta[static_cast<std::size_t>(axis)]; }
  double theta_minus(int axis) const { return minus_theta[static_cast<std::size_t>(axis)]; }
};

// Sorts the rays and assigns lifted arguments with theta(+a_1) = theta1.
// Throws InputError when two directions are parallel.
EdgeDirectionSet assign_arguments(const std::vector<Complex>& dirs, double theta1);
EdgeDirectionSet assign_arguments(const std::vector<Complex>& dirs);  // theta1 = arg a_1

// Residual of the bilinear face relation
//   w(x0)w(y0)a0 - w(x1)w(y0)a1 - w(x1)w(y1)a0 + w(x0)w(y1)a1
// where y0, y1 carry the white corner values, x0, x1 the black ones, and
// a0 = p(x0)-p(y0), a1 = p(x1)-p(y0) are reference edge vectors.
Complex hirota_residual(Complex wx0, Complex wx1, Complex wy0, Complex wy1,
                        Complex a0, Complex a1);

// Corner roles of a lattice facet: the white corners (even coordinate sum)
// are y0, y1 and the black corners x0, x1, with y0 adjacent to both blacks.
struct FacetRoles {
  LatticePoint y0, x0, x1, y1;
  bool base_even = true;
};
FacetRoles facet_roles(const Facet& f);

// Values of the discrete power function on the coordinate semi-axes:
// axis[k][n] for n = 0..n_max[k]. Odd entries are the unimodular constants
// exp(i(gamma-1)theta_k); even entries are the real positive products.
struct AxisValues {
  std::vector<std::vector<Complex>> axis;
};
AxisValues zgamma_axis_values(double gamma, const EdgeDirectionSet& dirs,
                              const std::vector<int>& n_max);

// A function on the integer box [0, dims] stored densely.
struct BrickFunction {
  LatticePoint dims;
  std::vector<Complex> values;

  std::size_t index(const LatticePoint& p) const;
  Complex at(const LatticePoint& p) const { return values[index(p)]; }
};

// Propagates seed values across the whole box [0, dims], one facet at a
// time, solving each face relation for its missing corner. The face
// relations are consistent across dimensions, so any fill order gives the
// same result; fill_seed randomizes the order for exactly that experiment.
// parity_offset shifts the white/black classification when the box is a
// translate of the true lattice region. Throws NumericError on a singular
// face or unreachable vertices, and validates that white values stay real
// positive and black values unimodular.
BrickFunction extend_dense(const LatticePoint& dims,
                           const std::vector<std::pair<LatticePoint, Complex>>& seeds,
                           const EdgeDirectionSet& dirs, int parity_offset = 0,
                           std::optional<std::uint64_t> fill_seed = std::nullopt);

// Seed points for extend_dense on the coordinate semi-axes from the origin.
std::vector<std::pair<LatticePoint, Complex>> axis_seeds(const AxisValues& axis);

// A complex multiplier per lattice vertex comparing two patterns.
struct ComparisonFunction {
  int d = 0;
  std::string domain;
  std::unordered_map<LatticePoint, Complex, LatticeHash> values;
};

// Extends a partial comparison function to the whole brick through the face
// relations; keys of both input and output are absolute lattice points.
ComparisonFunction extend_to_brick(const ComparisonFunction& seed, const Brick& brick,
                                   const EdgeDirectionSet& dirs,
                                   std::optional<std::uint64_t> fill_seed = std::nullopt);

// Ratio data of a pattern against the isoradial reference carried by the
// embedding: real radius ratios at white vertices, unimodular edge rotation
// factors at black vertices. Validates consistency across incident edges
// and the face relation on every face.
ComparisonFunction comparison_function(const LiftedEmbedding& reference,
                                       const CirclePattern& pattern);

struct ZgammaOptions {
  std::optional<double> theta1;             // default: principal arg of a_1
  std::optional<std::uint64_t> fill_seed;   // default: lexicographic fill
};

// The discrete power-function circle pattern over the embedding: lifts the
// embedding, rebases its brick to the nonnegative orthant preserving vertex
// parity, extends the semi-axis data, and lays out circle centers and
// intersection points from the edge rule p2(x) = p2(y) + w(y)w(x)(p1(x)-p1(y)).
CirclePattern zgamma_pattern(const LiftedEmbedding& emb, double gamma,
                             const ZgammaOptions& opts = {});

}  // namespace qcp
