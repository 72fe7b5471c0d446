#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "qcp/geom.hpp"
#include "qcp/lattice.hpp"
#include "qcp/projection.hpp"

namespace qcp {

// An axis-aligned unit square of the integer lattice: the four corners are
// base, base+e_ax1, base+e_ax1+e_ax2, base+e_ax2 with 0-based axes ax1 < ax2.
struct Facet {
  LatticePoint base;
  int ax1 = 0;
  int ax2 = 1;

  bool operator==(const Facet& o) const {
    return ax1 == o.ax1 && ax2 == o.ax2 && base == o.base;
  }
};

struct FacetHash {
  std::size_t operator()(const Facet& f) const noexcept {
    std::size_t h = LatticeHash{}(f.base);
    h ^= (static_cast<std::size_t>(f.ax1) * 0x9e3779b97f4a7c15ull) ^
         (static_cast<std::size_t>(f.ax2) * 0xc2b2ae3d27d4eb4full);
    return h;
  }
};

// Builds the canonical facet through vertex `at` spanned by two signed axis
// directions (1-based magnitudes, sign = direction of the spanning edge).
Facet facet_at(const LatticePoint& at, int signed_axis_a, int signed_axis_b);

// A two-dimensional subcomplex of the d-dimensional lattice, stored as a set
// of facets. Faces are unordered; geometric order comes from projection.
struct QuadSurface {
  int d = 0;
  std::unordered_set<Facet, FacetHash> facets;

  bool contains(const Facet& f) const { return facets.count(f) != 0; }
  void insert(Facet f);
  void erase(const Facet& f);

  bool operator==(const QuadSurface& o) const {
    return d == o.d && facets == o.facets;
  }

  // Facets in lexicographic (base, ax1, ax2) order, for deterministic output.
  std::vector<Facet> sorted_facets() const;

  // All corner points of all facets, lexicographically sorted, deduplicated.
  std::vector<LatticePoint> vertices() const;

  static std::array<LatticePoint, 4> corners(const Facet& f);
};

// Axis-aligned bounding box of all facet corners.
struct Brick {
  LatticePoint lo, hi;
};

Brick brick_of(const QuadSurface& s);

// Reads the lattice coordinates of a lifted embedding back into a facet set.
QuadSurface lift_embedding(const LiftedEmbedding& emb);

// Projects a surface to the plane along the given axis directions, producing
// a combinatorial embedding with positions sum_k coord_k * directions[k].
// The surface must be monotone for the result to be overlap-free.
LiftedEmbedding project_surface(const QuadSurface& s,
                                const std::vector<Complex>& directions);

struct MonotoneResult {
  bool ok = true;
  LatticePoint a, b;  // offending vertex pair when !ok
};

// A surface is monotone when every vertex pair is joined by a lattice path on
// the surface whose steps all lie in one orthant.
MonotoneResult check_monotone(const QuadSurface& s);

// Replaces the three facets forming a cube corner at `vertex` by the three
// opposite facets of the same cube. Involutive via the opposite corner.
QuadSurface simple_flip(const QuadSurface& s, const LatticePoint& vertex);

enum class StripHalf { Plus, Minus, Both };

// Rebuilds the surface across a full strip of facet pairs running from
// `pivot` along the second signed axis to the surface boundary. The rows
// spanned by (axes[0],axes[1]) and (axes[1],axes[2]) shift by the third and
// first signed axis direction respectively; Plus and Minus additionally seal
// the pivot end with the transversal facet. Signed 1-based axes.
QuadSurface strip_flip(const QuadSurface& s, const LatticePoint& pivot,
                       const std::array<int, 3>& axes, StripHalf half,
                       const std::vector<Complex>& directions);

}  // namespace qcp
