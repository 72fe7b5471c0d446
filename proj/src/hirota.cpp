#include "qcp/hirota.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>
#include <string>

#include "qcp/errors.hpp"
#include "qcp/log.hpp"

namespace qcp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParallelTol = 1e-9;
constexpr double kSingularTol = 1e-12;
constexpr double kResidualTol = 1e-9;
constexpr double kStructureTol = 1e-9;
constexpr double kEdgeConsistencyTol = 1e-10;
constexpr double kLayoutTol = 1e-8;

std::string point_str(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

EdgeDirectionSet assign_arguments(const std::vector<Complex>& dirs, double theta1) {
  const int d = static_cast<int>(dirs.size());
  if (d < 2) throw InputError("need at least two edge directions");
  for (const Complex& a : dirs)
    if (std::abs(a) <= kParallelTol) throw InputError("edge directions must be nonzero");

  struct Ray {
    double arg;
    int signed_axis;
  };
  std::vector<Ray> rays;
  rays.reserve(2 * static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    double a = std::arg(dirs[static_cast<std::size_t>(k)]);
    double b = a < 0 ? a + kPi : a - kPi;  // arg of -a_k, principal range
    rays.push_back({a, k + 1});
    rays.push_back({b, -(k + 1)});
  }
  std::sort(rays.begin(), rays.end(), [](const Ray& x, const Ray& y) {
    if (x.arg != y.arg) return x.arg < y.arg;
    return x.signed_axis < y.signed_axis;
  });
  int start = -1;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].signed_axis == 1) start = static_cast<int>(i);

  EdgeDirectionSet set;
  set.dirs = dirs;
  set.order.resize(2 * static_cast<std::size_t>(d));
  set.theta.resize(2 * static_cast<std::size_t>(d));
  set.plus_theta.resize(static_cast<std::size_t>(d));
  set.minus_theta.resize(static_cast<std::size_t>(d));
  double th = theta1;
  double prev_arg = rays[static_cast<std::size_t>(start)].arg;
  for (int m = 0; m < 2 * d; ++m) {
    const Ray& r = rays[static_cast<std::size_t>((start + m) % (2 * d))];
    if (m > 0) {
      double gap = r.arg - prev_arg;
      if (gap < 0) gap += 2 * kPi;
      if (gap <= kParallelTol || gap >= kPi - kParallelTol)
        throw InputError("edge directions contain a parallel or opposite pair");
      th += gap;
      prev_arg = r.arg;
    }
    set.order[static_cast<std::size_t>(m)] = r.signed_axis;
    set.theta[static_cast<std::size_t>(m)] = th;
    if (r.signed_axis > 0)
      set.plus_theta[static_cast<std::size_t>(r.signed_axis - 1)] = th;
    else
      set.minus_theta[static_cast<std::size_t>(-r.signed_axis - 1)] = th;
  }
  return set;
}

EdgeDirectionSet assign_arguments(const std::vector<Complex>& dirs) {
  if (dirs.empty()) throw InputError("need at least two edge directions");
  return assign_arguments(dirs, std::arg(dirs[0]));
}

Complex hirota_residual(Complex wx0, Complex wx1, Complex wy0, Complex wy1,
                        Complex a0, Complex a1) {
  return wx0 * wy0 * a0 - wx1 * wy0 * a1 - wx1 * wy1 * a0 + wx0 * wy1 * a1;
}

FacetRoles facet_roles(const Facet& f) {
  FacetRoles r;
  r.base_even = lattice_parity(f.base) == 0;
  LatticePoint pj = lattice_step(f.base, f.ax1, 1);
  LatticePoint pk = lattice_step(f.base, f.ax2, 1);
  LatticePoint pjk = lattice_step(pj, f.ax2, 1);
  if (r.base_even) {
    r.y0 = f.base;
    r.x0 = std::move(pj);
    r.x1 = std::move(pk);
    r.y1 = std::move(pjk);
  } else {
    r.x0 = f.base;
    r.y0 = std::move(pj);
    r.y1 = std::move(pk);
    r.x1 = std::move(pjk);
  }
  return r;
}

AxisValues zgamma_axis_values(double gamma, const EdgeDirectionSet& dirs,
                              const std::vector<int>& n_max) {
  if (!(gamma > 0.0) || !(gamma < 2.0))
    throw InputError("the exponent must lie in the open interval (0, 2)");
  if (static_cast<int>(n_max.size()) != dirs.d())
    throw InputError("need one semi-axis length per direction");
  AxisValues out;
  out.axis.resize(n_max.size());
  for (std::size_t k = 0; k < n_max.size(); ++k) {
    if (n_max[k] < 0) throw InputError("semi-axis lengths must be nonnegative");
    auto& ax = out.axis[k];
    ax.resize(static_cast<std::size_t>(n_max[k]) + 1);
    ax[0] = Complex{1.0, 0.0};
    const Complex odd = std::polar(1.0, (gamma - 1.0) * dirs.theta_plus(static_cast<int>(k)));
    double even = 1.0;
    for (int n = 1; n <= n_max[k]; ++n) {
      if (n % 2 == 1) {
        ax[static_cast<std::size_t>(n)] = odd;
      } else {
        const double m = static_cast<double>(n) / 2.0;
        even *= (m - 1.0 + gamma / 2.0) / (m - gamma / 2.0);
        ax[static_cast<std::size_t>(n)] = Complex{even, 0.0};
      }
    }
  }
  return out;
}

std::size_t BrickFunction::index(const LatticePoint& p) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (p[j] < 0 || p[j] > dims[j])
      throw InputError("point " + point_str(p) + " lies outside the brick");
    idx = idx * (static_cast<std::size_t>(dims[j]) + 1) + static_cast<std::size_t>(p[j]);
  }
  return idx;
}

namespace {

// Dense extension workspace over the box [0, dims].
struct ExtGrid {
  int d;
  LatticePoint dims;
  std::vector<std::size_t> stride;
  std::size_t nv = 1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Complex> val;
  std::vector<uint8_t> known;

  explicit ExtGrid(LatticePoint dims_in) : dims(std::move(dims_in)) {
    d = static_cast<int>(dims.size());
    stride.assign(static_cast<std::size_t>(d), 1);
    // stride[0] is the largest, so linear indices sort lexicographically.
    for (int j = d - 1; j >= 0; --j) {
      stride[static_cast<std::size_t>(j)] = nv;
      nv *= static_cast<std::size_t>(dims[static_cast<std::size_t>(j)]) + 1;
    }
    for (int j = 0; j < d; ++j)
      for (int k = j + 1; k < d; ++k) pairs.emplace_back(j, k);
    val.assign(nv, Complex{0.0, 0.0});
    known.assign(nv, 0);
  }

  std::size_t lin(const LatticePoint& p) const {
    std::size_t idx = 0;
    for (int j = 0; j < d; ++j)
      idx += static_cast<std::size_t>(p[static_cast<std::size_t>(j)]) *
             stride[static_cast<std::size_t>(j)];
    return idx;
  }

  LatticePoint unlin(std::size_t idx) const {
    LatticePoint p(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      p[static_cast<std::size_t>(j)] =
          static_cast<int>(idx / stride[static_cast<std::size_t>(j)]);
      idx %= stride[static_cast<std::size_t>(j)];
    }
    return p;
  }
};

}  // namespace

std::vector<std::pair<LatticePoint, Complex>> axis_seeds(const AxisValues& axis) {
  const std::size_t d = axis.axis.size();
  std::vector<std::pair<LatticePoint, Complex>> seeds;
  LatticePoint origin(d, 0);
  seeds.emplace_back(origin, Complex{1.0, 0.0});
  for (std::size_t k = 0; k < d; ++k) {
    LatticePoint p = origin;
    for (std::size_t n = 1; n < axis.axis[k].size(); ++n) {
      p[k] = static_cast<int>(n);
      seeds.emplace_back(p, axis.axis[k][n]);
    }
  }
  return seeds;
}

BrickFunction extend_dense(const LatticePoint& dims,
                           const std::vector<std::pair<LatticePoint, Complex>>& seeds,
                           const EdgeDirectionSet& dirs, int parity_offset,
                           std::optional<std::uint64_t> fill_seed) {
  const int d = dirs.d();
  if (static_cast<int>(dims.size()) != d)
    throw InputError("brick dimension does not match the direction count");
  for (int v : dims)
    if (v < 0) throw InputError("brick side lengths must be nonnegative");
  auto parity = [parity_offset](const LatticePoint& p) {
    return (lattice_parity(p) + parity_offset) % 2;
  };
  ExtGrid g(dims);
  const std::size_t npairs = g.pairs.size();

  std::mt19937_64 rng(fill_seed.value_or(0));
  using QEntry = std::pair<std::uint64_t, std::uint64_t>;  // (priority, facet id)
  std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> queue;

  auto push_ready = [&](std::size_t base_lin, std::size_t pair_idx) {
    std::uint64_t id = static_cast<std::uint64_t>(base_lin) * npairs + pair_idx;
    std::uint64_t key = fill_seed ? rng() : id;
    queue.emplace(key, id);
  };

  auto corner_lins = [&](std::size_t base_lin, int j, int k) {
    std::array<std::size_t, 4> c{};
    c[0] = base_lin;
    c[1] = base_lin + g.stride[static_cast<std::size_t>(j)];
    c[2] = base_lin + g.stride[static_cast<std::size_t>(k)];
    c[3] = c[1] + g.stride[static_cast<std::size_t>(k)];
    return c;
  };

  auto on_known = [&](const LatticePoint& v) {
    const std::size_t vlin = g.lin(v);
    for (std::size_t pi = 0; pi < npairs; ++pi) {
      auto [j, k] = g.pairs[pi];
      for (int dj = 0; dj >= -1; --dj) {
        int bj = v[static_cast<std::size_t>(j)] + dj;
        if (bj < 0 || bj >= g.dims[static_cast<std::size_t>(j)]) continue;
        for (int dk = 0; dk >= -1; --dk) {
          int bk = v[static_cast<std::size_t>(k)] + dk;
          if (bk < 0 || bk >= g.dims[static_cast<std::size_t>(k)]) continue;
          std::size_t base_lin = vlin;
          if (dj) base_lin -= g.stride[static_cast<std::size_t>(j)];
          if (dk) base_lin -= g.stride[static_cast<std::size_t>(k)];
          auto cs = corner_lins(base_lin, j, k);
          int cnt = 0;
          for (std::size_t c : cs) cnt += g.known[c] ? 1 : 0;
          if (cnt == 3) push_ready(base_lin, pi);
        }
      }
    }
  };

  if (seeds.empty()) throw InputError("extension needs at least one seed value");
  for (const auto& [p, value] : seeds) {
    if (static_cast<int>(p.size()) != d)
      throw InputError("seed point " + point_str(p) + " has wrong dimension");
    for (int j = 0; j < d; ++j)
      if (p[static_cast<std::size_t>(j)] < 0 ||
          p[static_cast<std::size_t>(j)] > g.dims[static_cast<std::size_t>(j)])
        throw InputError("seed point " + point_str(p) + " lies outside the brick");
    std::size_t li = g.lin(p);
    g.val[li] = value;
    g.known[li] = 1;
    on_known(p);
  }

  while (!queue.empty()) {
    auto [key, id] = queue.top();
    queue.pop();
    (void)key;
    std::size_t base_lin = static_cast<std::size_t>(id / npairs);
    auto [j, k] = g.pairs[static_cast<std::size_t>(id % npairs)];
    auto cs = corner_lins(base_lin, j, k);
    int missing = -1, cnt = 0;
    for (int c = 0; c < 4; ++c) {
      if (g.known[cs[static_cast<std::size_t>(c)]])
        ++cnt;
      else
        missing = c;
    }
    if (cnt == 4) continue;  // filled through another facet meanwhile

    LatticePoint base = g.unlin(base_lin);
    const bool base_even = parity(base) == 0;
    // Corner slots: 0 = base, 1 = base+e_j, 2 = base+e_k, 3 = base+both.
    // Whites are the even-parity slots {0, 3} or {1, 2}.
    const Complex aj = dirs.dirs[static_cast<std::size_t>(j)];
    const Complex ak = dirs.dirs[static_cast<std::size_t>(k)];
    const Complex a0 = base_even ? aj : -aj;
    const Complex a1 = ak;
    // Role slots in (y0, x0, x1, y1) order.
    const int sy0 = base_even ? 0 : 1;
    const int sx0 = base_even ? 1 : 0;
    const int sx1 = base_even ? 2 : 3;
    const int sy1 = base_even ? 3 : 2;
    auto w = [&](int slot) { return g.val[cs[static_cast<std::size_t>(slot)]]; };

    Complex A, B;
    if (missing == sx0) {
      A = w(sy0) * a0 + w(sy1) * a1;
      B = -w(sx1) * (w(sy0) * a1 + w(sy1) * a0);
    } else if (missing == sx1) {
      A = -(w(sy0) * a1 + w(sy1) * a0);
      B = w(sx0) * (w(sy0) * a0 + w(sy1) * a1);
    } else if (missing == sy0) {
      A = w(sx0) * a0 - w(sx1) * a1;
      B = w(sy1) * (w(sx0) * a1 - w(sx1) * a0);
    } else {
      A = w(sx0) * a1 - w(sx1) * a0;
      B = w(sy0) * (w(sx0) * a0 - w(sx1) * a1);
    }
    if (std::abs(A) <= kSingularTol)
      throw NumericError("face relation is singular at facet " + point_str(base) + "[" +
                         std::to_string(j + 1) + "," + std::to_string(k + 1) + "]");
    std::size_t mlin = cs[static_cast<std::size_t>(missing)];
    g.val[mlin] = -B / A;
    g.known[mlin] = 1;
    on_known(g.unlin(mlin));
  }

  for (std::size_t i = 0; i < g.nv; ++i)
    if (!g.known[i])
      throw NumericError("semi-axis data does not reach vertex " + point_str(g.unlin(i)));

  // Validate structure and the face relation everywhere.
  double max_residual = 0.0;
  for (std::size_t i = 0; i < g.nv; ++i) {
    LatticePoint p = g.unlin(i);
    const Complex w = g.val[i];
    if (parity(p) == 0) {
      if (std::abs(w.imag()) > kStructureTol || w.real() <= 0.0)
        throw NumericError("white value at " + point_str(p) +
                           " is not real positive after extension");
    } else if (std::abs(std::abs(w) - 1.0) > kStructureTol) {
      throw NumericError("black value at " + point_str(p) +
                         " is not unimodular after extension");
    }
    for (auto [j, k] : g.pairs) {
      if (p[static_cast<std::size_t>(j)] >= g.dims[static_cast<std::size_t>(j)] ||
          p[static_cast<std::size_t>(k)] >= g.dims[static_cast<std::size_t>(k)])
        continue;
      auto cs = corner_lins(i, j, k);
      const bool base_even = parity(p) == 0;
      const Complex a0 = base_even ? dirs.dirs[static_cast<std::size_t>(j)]
                                   : -dirs.dirs[static_cast<std::size_t>(j)];
      const Complex a1 = dirs.dirs[static_cast<std::size_t>(k)];
      const int sy0 = base_even ? 0 : 1, sx0 = base_even ? 1 : 0;
      const int sx1 = base_even ? 2 : 3, sy1 = base_even ? 3 : 2;
      Complex res = hirota_residual(g.val[cs[static_cast<std::size_t>(sx0)]],
                                    g.val[cs[static_cast<std::size_t>(sx1)]],
                                    g.val[cs[static_cast<std::size_t>(sy0)]],
                                    g.val[cs[static_cast<std::size_t>(sy1)]], a0, a1);
      max_residual = std::max(max_residual, std::abs(res));
    }
  }
  if (max_residual > kResidualTol)
    throw NumericError("face relation residual " + std::to_string(max_residual) +
                       " exceeds tolerance after extension");
  log_debug("brick extension complete, max residual " + std::to_string(max_residual));

  BrickFunction out;
  out.dims = std::move(g.dims);
  out.values = std::move(g.val);
  return out;
}

ComparisonFunction extend_to_brick(const ComparisonFunction& seed, const Brick& brick,
                                   const EdgeDirectionSet& dirs,
                                   std::optional<std::uint64_t> fill_seed) {
  const int d = dirs.d();
  if (seed.d != d) throw InputError("seed dimension does not match the direction count");
  if (static_cast<int>(brick.lo.size()) != d || static_cast<int>(brick.hi.size()) != d)
    throw InputError("brick corners have wrong dimension");
  LatticePoint dims(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    dims[static_cast<std::size_t>(j)] =
        brick.hi[static_cast<std::size_t>(j)] - brick.lo[static_cast<std::size_t>(j)];
    if (dims[static_cast<std::size_t>(j)] < 0)
      throw InputError("brick upper corner lies below its lower corner");
  }
  std::vector<std::pair<LatticePoint, Complex>> seeds;
  seeds.reserve(seed.values.size());
  for (const auto& [p, value] : seed.values) {
    LatticePoint q = p;
    for (int j = 0; j < d; ++j) q[static_cast<std::size_t>(j)] -= brick.lo[static_cast<std::size_t>(j)];
    seeds.emplace_back(std::move(q), value);
  }
  std::sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.first.begin(), a.first.end(),
                                        b.first.begin(), b.first.end());
  });
  BrickFunction dense =
      extend_dense(dims, seeds, dirs, lattice_parity(brick.lo), fill_seed);

  ComparisonFunction out;
  out.d = d;
  out.domain = "brick";
  out.values.reserve(dense.values.size());
  LatticePoint p(static_cast<std::size_t>(d), 0);
  // Odometer over the box, absolute coordinates in the output keys.
  std::size_t idx = 0;
  while (true) {
    LatticePoint abs = p;
    for (int j = 0; j < d; ++j) abs[static_cast<std::size_t>(j)] += brick.lo[static_cast<std::size_t>(j)];
    out.values.emplace(std::move(abs), dense.values[idx]);
    int j = d - 1;
    while (j >= 0 && p[static_cast<std::size_t>(j)] == dims[static_cast<std::size_t>(j)]) {
      p[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++p[static_cast<std::size_t>(j)];
    idx = dense.index(p);
  }
  return out;
}

ComparisonFunction comparison_function(const LiftedEmbedding& reference,
                                       const CirclePattern& pattern) {
  const BQuadGraph& g = reference.graph;
  if (pattern.graph.vertex_count() != g.vertex_count() ||
      pattern.graph.faces != g.faces)
    throw InputError("pattern and reference are not carried by the same graph");
  const int n = g.vertex_count();

  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (g.is_white(v)) {
      double r = pattern.radius[static_cast<std::size_t>(v)];
      if (!(r > 0.0))
        throw InputError("pattern radius at white vertex " + std::to_string(v) +
                         " is not positive");
      w[static_cast<std::size_t>(v)] = Complex{r, 0.0};
    }
  for (int x = 0; x < n; ++x) {
    if (g.is_white(x)) continue;
    bool have = false;
    for (int ei : g.vertex_edges[static_cast<std::size_t>(x)]) {
      const auto& e = g.edges[static_cast<std::size_t>(ei)];
      int y = e.a == x ? e.b : e.a;
      Complex d1 = reference.pos[static_cast<std::size_t>(x)] -
                   reference.pos[static_cast<std::size_t>(y)];
      Complex d2 = pattern.pos[static_cast<std::size_t>(x)] -
                   pattern.pos[static_cast<std::size_t>(y)];
      Complex cand = d2 / (w[static_cast<std::size_t>(y)] * d1);
      if (!have) {
        w[static_cast<std::size_t>(x)] = cand;
        have = true;
      } else if (std::abs(cand - w[static_cast<std::size_t>(x)]) > kEdgeConsistencyTol) {
        throw InputError("edge factors at black vertex " + std::to_string(x) +
                         " disagree; the pattern does not compare to the reference");
      }
    }
    if (!have)
      throw InputError("black vertex " + std::to_string(x) + " has no incident edge");
    if (std::abs(std::abs(w[static_cast<std::size_t>(x)]) - 1.0) > kEdgeConsistencyTol)
      throw InputError("edge factor at black vertex " + std::to_string(x) +
                       " is not unimodular");
  }

  for (int fi = 0; fi < g.face_count(); ++fi) {
    const auto& face = g.faces[static_cast<std::size_t>(fi)];
    auto p1 = [&](int v) { return reference.pos[static_cast<std::size_t>(v)]; };
    Complex a0 = p1(face[1]) - p1(face[0]);
    Complex a1 = p1(face[3]) - p1(face[0]);
    Complex res = hirota_residual(w[static_cast<std::size_t>(face[1])],
                                  w[static_cast<std::size_t>(face[3])],
                                  w[static_cast<std::size_t>(face[0])],
                                  w[static_cast<std::size_t>(face[2])], a0, a1);
    if (std::abs(res) > kResidualTol)
      throw InputError("face relation fails on face " + std::to_string(fi) +
                       " with residual " + std::to_string(std::abs(res)));
  }

  ComparisonFunction out;
  out.d = reference.d();
  out.domain = "embedding";
  out.values.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    out.values.emplace(reference.coords[static_cast<std::size_t>(v)],
                       w[static_cast<std::size_t>(v)]);
  return out;
}

CirclePattern zgamma_pattern(const LiftedEmbedding& emb, double gamma,
                             const ZgammaOptions& opts) {
  QuadSurface surf = lift_embedding(emb);
  Brick brick = brick_of(surf);
  LatticePoint lo = brick.lo;
  if (lattice_parity(lo) != 0) lo[0] -= 1;  // keep vertex colors fixed

  const int d = emb.d();
  LatticePoint dims(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    dims[static_cast<std::size_t>(j)] = brick.hi[static_cast<std::size_t>(j)] -
                                        lo[static_cast<std::size_t>(j)];

  EdgeDirectionSet dirset =
      opts.theta1 ? assign_arguments(emb.directions, *opts.theta1)
                  : assign_arguments(emb.directions);
  std::vector<int> n_max(dims.begin(), dims.end());
  AxisValues axis = zgamma_axis_values(gamma, dirset, n_max);
  BrickFunction ext = extend_dense(dims, axis_seeds(axis), dirset, 0, opts.fill_seed);

  const int n = emb.graph.vertex_count();
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    LatticePoint p = emb.coords[static_cast<std::size_t>(v)];
    for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(j)] -= lo[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(v)] = ext.at(p);
  }

  CirclePattern pat;
  pat.graph = emb.graph;
  pat.labels = embedding_labelling(emb);
  pat.radius.assign(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v)
    if (emb.graph.is_white(v)) pat.radius[static_cast<std::size_t>(v)] = w[static_cast<std::size_t>(v)].real();

  // Lay out from the edge rule; the face relation guarantees closure.
  pat.pos.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
  std::vector<uint8_t> placed(static_cast<std::size_t>(n), 0);
  std::queue<int> bfs;
  pat.pos[static_cast<std::size_t>(emb.seed_vertex)] = Complex{0.0, 0.0};
  placed[static_cast<std::size_t>(emb.seed_vertex)] = 1;
  bfs.push(emb.seed_vertex);
  auto edge_target = [&](int y, int x) {
    // y white, x black; returns the position of x from y.
    Complex d1 = emb.pos[static_cast<std::size_t>(x)] - emb.pos[static_cast<std::size_t>(y)];
    return w[static_cast<std::size_t>(y)] * w[static_cast<std::size_t>(x)] * d1;
  };
  int placed_count = 1;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int ei : emb.graph.vertex_edges[static_cast<std::size_t>(u)]) {
      const auto& e = emb.graph.edges[static_cast<std::size_t>(ei)];
      int v = e.a == u ? e.b : e.a;
      int y = emb.graph.is_white(u) ? u : v;
      int x = emb.graph.is_white(u) ? v : u;
      Complex step = edge_target(y, x);
      Complex pv = emb.graph.is_white(u) ? pat.pos[static_cast<std::size_t>(u)] + step
                                         : pat.pos[static_cast<std::size_t>(u)] - step;
      if (!placed[static_cast<std::size_t>(v)]) {
        pat.pos[static_cast<std::size_t>(v)] = pv;
        placed[static_cast<std::size_t>(v)] = 1;
        ++placed_count;
        bfs.push(v);
      } else if (std::abs(pv - pat.pos[static_cast<std::size_t>(v)]) > kLayoutTol) {
        throw NumericError("pattern layout does not close at vertex " + std::to_string(v));
      }
    }
  }
  if (placed_count != n)
    throw NumericError("embedding graph is disconnected; cannot lay out the pattern");
  return pat;
}

}  // namespace qcp
