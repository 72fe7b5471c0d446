#include "qcp/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcp {

void BBox::expand(Complex p) {
  xmin = std::min(xmin, p.real());
  xmax = std::max(xmax, p.real());
  ymin = std::min(ymin, p.imag());
  ymax = std::max(ymax, p.imag());
}

void BBox::expand(const BBox& o) {
  xmin = std::min(xmin, o.xmin);
  xmax = std::max(xmax, o.xmax);
  ymin = std::min(ymin, o.ymin);
  ymax = std::max(ymax, o.ymax);
}

BBox BBox::of(std::span<const Complex> pts) {
  BBox b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (Complex p : pts) b.expand(p);
  return b;
}

double polygon_area(std::span<const Complex> poly) {
  double a = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * a;
}

std::vector<Complex> clip_halfplane(std::span<const Complex> poly, Complex a, Complex b) {
  std::vector<Complex> out;
  const size_t n = poly.size();
  if (n == 0) return out;
  const Complex dir = b - a;
  auto side = [&](Complex p) { return cross(dir, p - a); };
  for (size_t i = 0; i < n; ++i) {
    Complex cur = poly[i];
    Complex nxt = poly[(i + 1) % n];
    double sc = side(cur), sn = side(nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      double t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

double convex_overlap_area(std::span<const Complex> subject, std::span<const Complex> clip) {
  std::vector<Complex> poly(subject.begin(), subject.end());
  const size_t m = clip.size();
  for (size_t i = 0; i < m && !poly.empty(); ++i) {
    poly = clip_halfplane(poly, clip[i], clip[(i + 1) % m]);
  }
  if (poly.size() < 3) return 0.0;
  return std::abs(polygon_area(poly));
}

bool quad_convex_ccw(const std::array<Complex, 4>& q, double tol) {
  double scale2 = 0;
  for (int i = 0; i < 4; ++i) scale2 = std::max(scale2, std::norm(q[(i + 1) % 4] - q[i]));
  for (int i = 0; i < 4; ++i) {
    Complex e0 = q[(i + 1) % 4] - q[i];
    Complex e1 = q[(i + 2) % 4] - q[(i + 1) % 4];
    if (cross(e0, e1) < -tol * scale2) return false;
  }
  return true;
}

namespace {

// Splits a simple quad into two triangles along an interior diagonal. For a
// convex quad either diagonal works; a non-convex simple quad has exactly one
// reflex corner and the interior diagonal emanates from it.
void triangulate_quad(const std::array<Complex, 4>& q, std::array<std::array<Complex, 3>, 2>& tris) {
  int reflex = -1;
  double orient = polygon_area(std::span<const Complex>(q.data(), 4)) >= 0 ? 1.0 : -1.0;
  for (int i = 0; i < 4; ++i) {
    Complex e0 = q[i] - q[(i + 3) % 4];
    Complex e1 = q[(i + 1) % 4] - q[i];
    if (orient * cross(e0, e1) < 0) reflex = i;
  }
  int s = (reflex >= 0) ? reflex : 0;
  tris[0] = {q[s], q[(s + 1) % 4], q[(s + 2) % 4]};
  tris[1] = {q[s], q[(s + 2) % 4], q[(s + 3) % 4]};
}

std::array<Complex, 3> ccw_triangle(const std::array<Complex, 3>& t) {
  if (polygon_area(std::span<const Complex>(t.data(), 3)) < 0) return {t[0], t[2], t[1]};
  return t;
}

}  // namespace

double quad_overlap_area(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  std::array<std::array<Complex, 3>, 2> ta, tb;
  triangulate_quad(a, ta);
  triangulate_quad(b, tb);
  double area = 0;
  for (const auto& t1 : ta) {
    auto c1 = ccw_triangle(t1);
    for (const auto& t2 : tb) {
      auto c2 = ccw_triangle(t2);
      area += convex_overlap_area(std::span<const Complex>(c1.data(), 3),
                                  std::span<const Complex>(c2.data(), 3));
    }
  }
  return area;
}

}  // namespace qcp
