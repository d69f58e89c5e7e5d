#include "lcagabor/zak.hpp"

#include "lcagabor/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcagabor {

ZakGrid zak_transform(const Window& f, const Subgroup& lattice) {
  require_same_group(f.group(), lattice.parent());
  return {lattice, kernels::zak(f, lattice.elements())};
}

double quasiperiodicity_residual(const ZakGrid& grid) {
  const auto& group = grid.group();
  const std::size_t n = group.cardinality();
  const Subgroup perp = annihilator(grid.lattice);
  double residual = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) {
      const Complex base = grid.values[x * n + w];
      for (std::size_t l : grid.lattice.elements()) {
        const Complex expected = std::conj(group.pairing(w, l)) * base;
        const std::size_t xl = group.add(x, l);
        for (std::size_t tau : perp.elements()) {
          const Complex actual = grid.values[xl * n + group.add(w, tau)];
          residual = std::max(residual, std::abs(actual - expected));
        }
      }
    }
  }
  return residual;
}

ZakMinimum min_modulus(const ZakGrid& grid) {
  const std::size_t n = grid.group().cardinality();
  ZakMinimum best{std::numeric_limits<double>::infinity(), {}};
  for (std::size_t idx = 0; idx < grid.values.size(); ++idx) {
    const double m = std::abs(grid.values[idx]);
    if (m < best.value) best = {m, {idx / n, idx % n}};
  }
  return best;
}

double zak_frame_scale(const Subgroup& lattice) {
  return static_cast<double>(lattice.parent().cardinality()) / static_cast<double>(lattice.size());
}

FrameReport zak_frame_bounds(const Window& g, const Subgroup& lattice, double tolerance) {
  const ZakGrid grid = zak_transform(g, lattice);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& v : grid.values) {
    const double m = std::norm(v);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  const double scale = zak_frame_scale(lattice);
  return FrameReport::from_bounds(scale * lo, scale * hi, tolerance);
}

double plane_energy(const ZakGrid& grid) {
  double sum = 0.0;
  for (const auto& v : grid.values) sum += std::norm(v);
  return sum / static_cast<double>(grid.group().cardinality());
}

}  // namespace lcagabor
