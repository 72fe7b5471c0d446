#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace qcp {

using Complex = std::complex<double>;

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

struct BBox {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  void expand(Complex p);
  void expand(const BBox& other);
  static BBox of(std::span<const Complex> pts);
  bool overlaps(const BBox& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
};

// Signed area, positive for counterclockwise simple polygons.
double polygon_area(std::span<const Complex> poly);

// Keeps the part of `poly` with cross(b - a, x - a) >= 0 (left of the directed
// line a -> b). Input need not be convex; output is the clipped polygon.
std::vector<Complex> clip_halfplane(std::span<const Complex> poly, Complex a, Complex b);

// Area of the intersection of two convex polygons (Sutherland-Hodgman).
double convex_overlap_area(std::span<const Complex> subject, std::span<const Complex> clip);

// True if the quadrilateral is convex with counterclockwise orientation
// (all consecutive edge cross products >= -tol * scale^2).
bool quad_convex_ccw(const std::array<Complex, 4>& q, double tol = 1e-12);

// Area of the intersection of two simple (possibly non-convex) quadrilaterals.
// Each quad is triangulated along an interior diagonal first.
double quad_overlap_area(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b);

}  // namespace qcp
