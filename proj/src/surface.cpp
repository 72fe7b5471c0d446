#include "qcp/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <queue>
#include <string>
#include <unordered_map>

#include "qcp/errors.hpp"
#include "qcp/log.hpp"

namespace qcp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParallelTol = 1e-9;
constexpr double kAngleTol = 1e-9;

std::string point_str(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string facet_str(const Facet& f) {
  return point_str(f.base) + "[" + std::to_string(f.ax1 + 1) + "," +
         std::to_string(f.ax2 + 1) + "]";
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.base != b.base) return lex_less(a.base, b.base);
  if (a.ax1 != b.ax1) return a.ax1 < b.ax1;
  return a.ax2 < b.ax2;
}

Facet translated(Facet f, int axis, int delta) {
  f.base[static_cast<std::size_t>(axis)] += delta;
  return f;
}

// True when v is a corner of f.
bool has_corner(const Facet& f, const LatticePoint& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    int diff = v[j] - f.base[j];
    int ja = static_cast<int>(j);
    if (ja == f.ax1 || ja == f.ax2) {
      if (diff != 0 && diff != 1) return false;
    } else if (diff != 0) {
      return false;
    }
  }
  return true;
}

bool has_edge(const Facet& f, const LatticePoint& u, const LatticePoint& v) {
  return has_corner(f, u) && has_corner(f, v);
}

// Angle between two nonzero plane vectors, in [0, pi].
double angle_between(Complex a, Complex b) {
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

}  // namespace

Facet facet_at(const LatticePoint& at, int signed_axis_a, int signed_axis_b) {
  int ja = std::abs(signed_axis_a) - 1;
  int jb = std::abs(signed_axis_b) - 1;
  if (signed_axis_a == 0 || signed_axis_b == 0 || ja == jb)
    throw InputError("facet axes must be distinct nonzero signed indices");
  Facet f;
  f.base = at;
  if (signed_axis_a < 0) f.base[static_cast<std::size_t>(ja)] -= 1;
  if (signed_axis_b < 0) f.base[static_cast<std::size_t>(jb)] -= 1;
  f.ax1 = std::min(ja, jb);
  f.ax2 = std::max(ja, jb);
  return f;
}

void QuadSurface::insert(Facet f) {
  if (d <= 0) throw InputError("surface dimension must be set before inserting facets");
  if (static_cast<int>(f.base.size()) != d)
    throw InputError("facet base has wrong dimension");
  if (f.ax1 < 0 || f.ax2 >= d || f.ax1 >= f.ax2)
    throw InputError("facet axes out of range");
  facets.insert(std::move(f));
}

void QuadSurface::erase(const Facet& f) { facets.erase(f); }

std::vector<Facet> QuadSurface::sorted_facets() const {
  std::vector<Facet> out(facets.begin(), facets.end());
  std::sort(out.begin(), out.end(), facet_less);
  return out;
}

std::array<LatticePoint, 4> QuadSurface::corners(const Facet& f) {
  LatticePoint c0 = f.base;
  LatticePoint c1 = lattice_step(c0, f.ax1, 1);
  LatticePoint c2 = lattice_step(c1, f.ax2, 1);
  LatticePoint c3 = lattice_step(c0, f.ax2, 1);
  return {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
}

std::vector<LatticePoint> QuadSurface::vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(facets.size() * 2);
  for (const Facet& f : facets)
    for (auto& c : corners(f)) out.push_back(c);
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Brick brick_of(const QuadSurface& s) {
  if (s.facets.empty()) throw InputError("cannot take the bounding brick of an empty surface");
  Brick b;
  b.lo = LatticePoint(static_cast<std::size_t>(s.d), 0);
  b.hi = b.lo;
  bool first = true;
  for (const Facet& f : s.facets) {
    for (auto& c : QuadSurface::corners(f)) {
      if (first) {
        b.lo = c;
        b.hi = c;
        first = false;
        continue;
      }
      for (int j = 0; j < s.d; ++j) {
        b.lo[j] = std::min(b.lo[j], c[j]);
        b.hi[j] = std::max(b.hi[j], c[j]);
      }
    }
  }
  return b;
}

QuadSurface lift_embedding(const LiftedEmbedding& emb) {
  QuadSurface s;
  s.d = emb.d();
  if (s.d < 2) throw InputError("embedding carries no lattice coordinates to lift");
  for (int fi = 0; fi < emb.graph.face_count(); ++fi) {
    const auto& face = emb.graph.faces[static_cast<std::size_t>(fi)];
    Facet f;
    f.base = emb.coords[static_cast<std::size_t>(face[0])];
    for (int k = 1; k < 4; ++k) {
      const auto& c = emb.coords[static_cast<std::size_t>(face[k])];
      for (int j = 0; j < s.d; ++j) f.base[j] = std::min(f.base[j], c[j]);
    }
    int varying = 0;
    f.ax1 = -1;
    f.ax2 = -1;
    for (int j = 0; j < s.d; ++j) {
      bool varies = false;
      for (int k = 0; k < 4; ++k) {
        int diff = emb.coords[static_cast<std::size_t>(face[k])][j] - f.base[j];
        if (diff < 0 || diff > 1)
          throw InputError("face " + std::to_string(fi) +
                           " does not span a unit lattice box");
        if (diff == 1) varies = true;
      }
      if (varies) {
        ++varying;
        if (f.ax1 < 0)
          f.ax1 = j;
        else
          f.ax2 = j;
      }
    }
    if (varying != 2)
      throw InputError("face " + std::to_string(fi) + " varies along " +
                       std::to_string(varying) + " axes; lattice facets vary along 2");
    // Consecutive face corners must be unit steps of the box.
    for (int k = 0; k < 4; ++k) {
      const auto& a = emb.coords[static_cast<std::size_t>(face[k])];
      const auto& b = emb.coords[static_cast<std::size_t>(face[(k + 1) % 4])];
      int nz = 0;
      for (int j = 0; j < s.d; ++j) nz += std::abs(a[j] - b[j]);
      if (nz != 1)
        throw InputError("face " + std::to_string(fi) +
                         " has a non-unit edge in lattice coordinates");
    }
    if (s.contains(f))
      throw InputError("two faces lift to the same lattice facet " + facet_str(f));
    s.insert(std::move(f));
  }
  return s;
}

LiftedEmbedding project_surface(const QuadSurface& s,
                                const std::vector<Complex>& directions) {
  if (s.facets.empty()) throw InputError("cannot project an empty surface");
  if (static_cast<int>(directions.size()) != s.d)
    throw InputError("need one direction per lattice axis");

  std::vector<LatticePoint> verts = s.vertices();
  std::unordered_map<LatticePoint, int, LatticeHash> index;
  index.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    index.emplace(verts[i], static_cast<int>(i));

  std::vector<BQuadGraph::Color> colors(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    colors[i] = lattice_parity(verts[i]) == 0 ? BQuadGraph::Color::White
                                              : BQuadGraph::Color::Black;

  std::vector<std::array<int, 4>> faces;
  faces.reserve(s.facets.size());
  for (const Facet& f : s.sorted_facets()) {
    double orient = cross(directions[static_cast<std::size_t>(f.ax1)],
                          directions[static_cast<std::size_t>(f.ax2)]);
    if (std::abs(orient) <= kParallelTol)
      throw InputError("axis directions " + std::to_string(f.ax1 + 1) + " and " +
                       std::to_string(f.ax2 + 1) + " are parallel");
    auto cs = QuadSurface::corners(f);
    std::array<int, 4> face{};
    if (orient > 0) {
      for (int k = 0; k < 4; ++k) face[k] = index.at(cs[static_cast<std::size_t>(k)]);
    } else {
      face = {index.at(cs[0]), index.at(cs[3]), index.at(cs[2]), index.at(cs[1])};
    }
    if (colors[static_cast<std::size_t>(face[0])] != BQuadGraph::Color::White)
      face = {face[1], face[2], face[3], face[0]};
    faces.push_back(face);
  }

  LiftedEmbedding emb;
  emb.coords.assign(verts.begin(), verts.end());
  emb.scales.assign(static_cast<std::size_t>(s.d), 1.0);
  emb.directions = directions;
  emb.pos.resize(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Complex p{0.0, 0.0};
    for (int j = 0; j < s.d; ++j)
      p += static_cast<double>(verts[i][j]) * directions[static_cast<std::size_t>(j)];
    emb.pos[i] = p;
  }
  LatticePoint origin(static_cast<std::size_t>(s.d), 0);
  auto it = index.find(origin);
  emb.seed_vertex = it != index.end() ? it->second : 0;
  emb.graph = BQuadGraph::build(std::move(colors), std::move(faces));
  return emb;
}

MonotoneResult check_monotone(const QuadSurface& s) {
  MonotoneResult res;
  std::vector<LatticePoint> verts = s.vertices();
  const int n = static_cast<int>(verts.size());
  if (n == 0) return res;
  std::unordered_map<LatticePoint, int, LatticeHash> index;
  index.reserve(verts.size());
  for (int i = 0; i < n; ++i) index.emplace(verts[static_cast<std::size_t>(i)], i);

  struct Arc {
    int to, axis, sign;
  };
  std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(n));
  auto add_edge = [&](const LatticePoint& a, const LatticePoint& b, int axis) {
    int ia = index.at(a), ib = index.at(b);
    int sign = b[static_cast<std::size_t>(axis)] - a[static_cast<std::size_t>(axis)];
    adj[static_cast<std::size_t>(ia)].push_back({ib, axis, sign});
    adj[static_cast<std::size_t>(ib)].push_back({ia, axis, -sign});
  };
  std::unordered_set<uint64_t> seen_edges;
  auto edge_once = [&](const LatticePoint& a, const LatticePoint& b, int axis) {
    uint64_t key =
        (static_cast<uint64_t>(static_cast<uint32_t>(std::min(index.at(a), index.at(b)))) << 32) |
        static_cast<uint32_t>(std::max(index.at(a), index.at(b)));
    if (seen_edges.insert(key).second) add_edge(a, b, axis);
  };
  for (const Facet& f : s.facets) {
    auto c = QuadSurface::corners(f);
    edge_once(c[0], c[1], f.ax1);
    edge_once(c[1], c[2], f.ax2);
    edge_once(c[3], c[2], f.ax1);
    edge_once(c[0], c[3], f.ax2);
  }

  // joined[i*n+j] marks pairs connected inside at least one orthant.
  std::vector<uint8_t> joined(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<uint8_t> vis(static_cast<std::size_t>(n));
  const int orthants = 1 << s.d;
  for (int mask = 0; mask < orthants; ++mask) {
    for (int start = 0; start < n; ++start) {
      std::fill(vis.begin(), vis.end(), 0);
      stack.clear();
      stack.push_back(start);
      vis[static_cast<std::size_t>(start)] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        joined[static_cast<std::size_t>(start) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(u)] = 1;
        for (const Arc& arc : adj[static_cast<std::size_t>(u)]) {
          int want = (mask >> arc.axis) & 1 ? -1 : 1;
          if (arc.sign != want) continue;
          if (!vis[static_cast<std::size_t>(arc.to)]) {
            vis[static_cast<std::size_t>(arc.to)] = 1;
            stack.push_back(arc.to);
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!joined[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(j)]) {
        res.ok = false;
        res.a = verts[static_cast<std::size_t>(i)];
        res.b = verts[static_cast<std::size_t>(j)];
        return res;
      }
  return res;
}

QuadSurface simple_flip(const QuadSurface& s, const LatticePoint& vertex) {
  if (static_cast<int>(vertex.size()) != s.d)
    throw InputError("flip vertex has wrong dimension");
  std::vector<Facet> at;
  for (const Facet& f : s.sorted_facets())
    if (has_corner(f, vertex)) at.push_back(f);
  if (at.size() != 3)
    throw InputError("vertex " + point_str(vertex) + " has " +
                     std::to_string(at.size()) +
                     " incident facets; a corner flip needs exactly 3");

  // Signed axis directions pointing away from the vertex, per facet.
  auto away = [&](const Facet& f) {
    std::array<int, 2> a{};
    a[0] = vertex[static_cast<std::size_t>(f.ax1)] == f.base[static_cast<std::size_t>(f.ax1)]
               ? (f.ax1 + 1)
               : -(f.ax1 + 1);
    a[1] = vertex[static_cast<std::size_t>(f.ax2)] == f.base[static_cast<std::size_t>(f.ax2)]
               ? (f.ax2 + 1)
               : -(f.ax2 + 1);
    return a;
  };
  std::unordered_map<int, int> count;
  for (const Facet& f : at)
    for (int sa : away(f)) ++count[sa];
  if (count.size() != 3)
    throw InputError("facets at " + point_str(vertex) + " do not form a cube corner");
  for (auto& [sa, c] : count) {
    (void)sa;
    if (c != 2)
      throw InputError("facets at " + point_str(vertex) + " do not form a cube corner");
  }

  QuadSurface out = s;
  for (const Facet& f : at) {
    auto aw = away(f);
    int missing = 0;
    for (auto& [sa, c] : count) {
      (void)c;
      if (sa != aw[0] && sa != aw[1]) missing = sa;
    }
    Facet moved = translated(f, std::abs(missing) - 1, missing > 0 ? 1 : -1);
    if (out.contains(moved))
      throw InputError("corner flip collides with existing facet " + facet_str(moved));
    out.erase(f);
    out.insert(std::move(moved));
  }
  return out;
}

QuadSurface strip_flip(const QuadSurface& s, const LatticePoint& pivot,
                       const std::array<int, 3>& axes, StripHalf half,
                       const std::vector<Complex>& directions) {
  if (static_cast<int>(pivot.size()) != s.d)
    throw InputError("strip pivot has wrong dimension");
  if (static_cast<int>(directions.size()) != s.d)
    throw InputError("need one direction per lattice axis");
  for (int a : axes)
    if (a == 0 || std::abs(a) > s.d)
      throw InputError("strip axes must be signed indices in 1.." + std::to_string(s.d));
  if (std::abs(axes[0]) == std::abs(axes[1]) || std::abs(axes[1]) == std::abs(axes[2]) ||
      std::abs(axes[0]) == std::abs(axes[2]))
    throw InputError("strip axes must be pairwise distinct");

  auto dir_of = [&](int sa) {
    Complex a = directions[static_cast<std::size_t>(std::abs(sa) - 1)];
    return sa > 0 ? a : -a;
  };
  const Complex b1 = dir_of(axes[0]), b2 = dir_of(axes[1]), b3 = dir_of(axes[2]);
  for (auto [x, y] : {std::pair<Complex, Complex>{b1, b2}, {b2, b3}, {b1, b3}}) {
    double ang = angle_between(x, y);
    if (ang < kParallelTol || ang > kPi - kParallelTol)
      throw InputError("strip axis directions are parallel in the plane");
  }
  const double beta1 = angle_between(b1, b2);
  const double beta2 = angle_between(b2, b3);
  const double a13 = angle_between(b1, b3);
  const bool wedge_case = std::abs(beta1 + beta2 - a13) < kAngleTol;
  const bool surround_case = std::abs(beta1 + beta2 - (2.0 * kPi - a13)) < kAngleTol;

  if (half == StripHalf::Plus && !wedge_case)
    throw InputError(
        "angle condition fails for the positive half-strip: the transversal facet "
        "cannot fill the vacated wedge at the pivot");
  if (half == StripHalf::Minus && !surround_case)
    throw InputError(
        "angle condition fails for the negative half-strip: the transversal facet "
        "cannot fill the vacated wedge at the shifted pivot");
  if (half == StripHalf::Both && !wedge_case && !surround_case)
    throw InputError("angle condition fails for the whole-axis strip");

  // The negative half is the positive half seen from the shifted pivot with
  // the strip axis reversed; rows and shifts coincide facet-for-facet.
  LatticePoint pv = pivot;
  std::array<int, 3> ax = axes;
  if (half == StripHalf::Minus) {
    pv = lattice_step(pv, std::abs(axes[1]) - 1, axes[1] > 0 ? 1 : -1);
    ax[1] = -axes[1];
  }

  const int step_axis = std::abs(ax[1]) - 1;
  const int step_sign = ax[1] > 0 ? 1 : -1;
  const Facet f1 = facet_at(pv, ax[0], ax[1]);
  const Facet f2 = facet_at(pv, ax[1], ax[2]);
  if (!s.contains(f1))
    throw InputError("strip row facet " + facet_str(f1) + " is missing at the pivot");
  if (!s.contains(f2))
    throw InputError("strip row facet " + facet_str(f2) + " is missing at the pivot");

  if (half != StripHalf::Both) {
    const Facet cap = facet_at(pv, ax[0], ax[2]);
    if (s.contains(cap))
      throw InputError("transversal facet " + facet_str(cap) +
                       " already present at the pivot");
  }

  Brick brick = brick_of(s);
  const int span = brick.hi[static_cast<std::size_t>(step_axis)] -
                   brick.lo[static_cast<std::size_t>(step_axis)];
  auto scan_row = [&](const Facet& f, int dir_sign) {
    int run = 0;
    while (s.contains(translated(f, step_axis, (run + 1) * dir_sign))) ++run;
    for (int n = run + 2; n <= span + 1; ++n)
      if (s.contains(translated(f, step_axis, n * dir_sign)))
        throw InputError("strip row starting at " + facet_str(f) +
                         " has a hole before a further facet");
    return run;
  };

  int n_hi = scan_row(f1, step_sign);
  {
    int other = scan_row(f2, step_sign);
    if (other != n_hi)
      throw InputError("strip rows have different lengths (" + std::to_string(n_hi + 1) +
                       " vs " + std::to_string(other + 1) + " facets)");
  }
  int n_lo = 0;
  if (half == StripHalf::Both) {
    n_lo = -scan_row(f1, -step_sign);
    int other = -scan_row(f2, -step_sign);
    if (other != n_lo)
      throw InputError("strip rows have different lengths (" + std::to_string(-n_lo + 1) +
                       " vs " + std::to_string(-other + 1) + " facets)");
  }

  // The far end of each row must lie on the surface boundary: the last
  // translate's outward cross edges may bound no other facet, or the shifted
  // rows would sweep into attached geometry.
  auto check_far_end = [&](int level_steps, int outward_sign) {
    LatticePoint end = lattice_step(pv, step_axis, level_steps * step_sign);
    auto guard = [&](const Facet& row_last, int cross_axis_signed) {
      LatticePoint other = lattice_step(end, std::abs(cross_axis_signed) - 1,
                                        cross_axis_signed > 0 ? 1 : -1);
      for (const Facet& g : s.facets) {
        if (g == row_last) continue;
        if (has_edge(g, end, other))
          throw InputError("strip does not reach the surface boundary: facet " +
                           facet_str(g) + " attaches at its far end");
      }
    };
    int last_n = outward_sign > 0 ? n_hi : n_lo;
    guard(translated(f1, step_axis, last_n * step_sign), ax[0]);
    guard(translated(f2, step_axis, last_n * step_sign), ax[2]);
  };
  check_far_end(n_hi + 1, 1);
  if (half == StripHalf::Both) check_far_end(n_lo, -1);

  QuadSurface out = s;
  const int shift1_axis = std::abs(ax[2]) - 1, shift1_sign = ax[2] > 0 ? 1 : -1;
  const int shift2_axis = std::abs(ax[0]) - 1, shift2_sign = ax[0] > 0 ? 1 : -1;
  for (int n = n_lo; n <= n_hi; ++n) {
    Facet r1 = translated(f1, step_axis, n * step_sign);
    Facet r2 = translated(f2, step_axis, n * step_sign);
    out.erase(r1);
    out.erase(r2);
    Facet m1 = translated(r1, shift1_axis, shift1_sign);
    Facet m2 = translated(r2, shift2_axis, shift2_sign);
    if (out.contains(m1))
      throw InputError("strip rebuild collides with existing facet " + facet_str(m1));
    if (out.contains(m2))
      throw InputError("strip rebuild collides with existing facet " + facet_str(m2));
    out.insert(std::move(m1));
    out.insert(std::move(m2));
  }
  if (half != StripHalf::Both) {
    Facet cap = facet_at(pv, ax[0], ax[2]);
    if (out.contains(cap))
      throw InputError("strip rebuild collides with existing facet " + facet_str(cap));
    out.insert(std::move(cap));
  }
  log_debug("strip flip at " + point_str(pivot) + ": rows of " +
            std::to_string(n_hi - n_lo + 1) + " facet pairs rebuilt");
  return out;
}

}  // namespace qcp
