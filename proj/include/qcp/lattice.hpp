#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qcp {

// A point of the d-dimensional integer lattice.
using LatticePoint = std::vector<int>;

struct LatticeHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Coordinate-sum parity: 0 marks white vertices, 1 black vertices.
inline int lattice_parity(const LatticePoint& p) {
  long long s = 0;
  for (int v : p) s += v;
  return static_cast<int>(((s % 2) + 2) % 2);
}

// p shifted by delta along one axis (0-based).
inline LatticePoint lattice_step(LatticePoint p, int axis, int delta) {
  p[static_cast<std::size_t>(axis)] += delta;
  return p;
}

}  // namespace qcp
