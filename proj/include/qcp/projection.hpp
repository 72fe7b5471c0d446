#pragma once

#include <vector>

#include "qcp/geom.hpp"
#include "qcp/graph.hpp"
#include "qcp/pattern.hpp"

namespace qcp {

// A two-dimensional affine plane t + span(u1, u2) inside R^d, with u1, u2
// orthonormal. The plane must not be orthogonal to any coordinate axis.
struct PlaneSpec {
  int d = 0;
  std::vector<double> u1, u2, t;

  void validate() const;  // throws InputError
};

// Per-axis lattice scales 1/|P(e_j)| making the projected, scaled basis
// vectors unit length. Throws NumericError if some |P(e_j)| <= 1e-9.
std::vector<double> projection_scales(const PlaneSpec& plane);

// Invariant plane of the cyclic coordinate-shift of R^folds on which the
// shift acts as a rotation by 2*pi/folds; folds must be odd and >= 5.
// The offset is taken along the main diagonal (1, ..., 1).
PlaneSpec symmetric_plane(int folds, double offset);
PlaneSpec symmetric_plane(int folds, const std::vector<double>& offset);

// A rhombic embedding cut from the scaled lattice by the Voronoi-cell
// construction, remembering the integer lattice coordinate of each vertex.
// Coordinates are rebased so the seed vertex (the cell containing t) is the
// origin; positions are the exact signed sums of coordinates times axis
// directions, so lifting and re-projecting reproduces them bit-for-bit.
struct LiftedEmbedding {
  BQuadGraph graph;
  std::vector<Complex> pos;               // per vertex
  std::vector<std::vector<int>> coords;   // per vertex, d integers
  std::vector<double> scales;             // c_j
  std::vector<Complex> directions;        // unit projected axis directions a_j
  int seed_vertex = 0;                    // white vertex at lattice origin

  int d() const { return static_cast<int>(scales.size()); }
};

// Cut-and-project construction: vertices are lattice points whose open
// Voronoi cell meets the plane within projected distance < window_radius of
// t; edges come from facet crossings of codimension 1, faces from
// codimension 2. Codimension-3 crossings yield degree-6 faces which are
// split by adjoining the nearer hypercube corner. Throws DegeneracyError on
// grazing geometry, higher-codimension crossings, or an offset sitting on a
// Voronoi wall.
LiftedEmbedding generate_embedding(const PlaneSpec& plane, double window_radius);

// Direct d=2 construction: the staircase quadrant {n1, n2 >= 0,
// n1 + n2 <= sum_max} with positions n1*a1 + n2*a2. Requires cross(a1,a2)>0.
LiftedEmbedding rhombic_grid(Complex a1, Complex a2, int sum_max);

// Intersection angle of each face read off the rhombus geometry (the angle
// at the black corners).
Labelling embedding_labelling(const LiftedEmbedding& emb);

// The pattern with unit circles at white vertices that the embedding itself
// realizes: centers and touch points at the embedding positions.
CirclePattern isoradial_pattern(const LiftedEmbedding& emb);

}  // namespace qcp
