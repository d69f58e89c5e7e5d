#pragma once

#include "lcagabor/finite_lca.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/window.hpp"

#include <vector>

namespace lcagabor {

/// Zak transform values on the whole plane (not just a fundamental domain).
struct ZakGrid {
  Subgroup lattice;             ///< Lambda, a subgroup of G
  std::vector<Complex> values;  ///< plane index = x * |G| + w

  const FiniteLcaGroup& group() const { return lattice.parent(); }
  Complex at(TfPoint z) const { return values[z.x * group().cardinality() + z.omega]; }
};

/// Zf(x, w) = sum_{l in Lambda} f(x + l) w(l).
ZakGrid zak_transform(const Window& f, const Subgroup& lattice);

/// max over x, w, l in Lambda, tau in Lambda^perp of |F(x + l, w + tau) - conj(w(l)) F(x, w)|.
double quasiperiodicity_residual(const ZakGrid& grid);

struct ZakMinimum {
  double value = 0.0;
  TfPoint location;
};

ZakMinimum min_modulus(const ZakGrid& grid);

/// On Lambda x Lambda^perp the frame operator is unitarily equivalent to
/// multiplication by |Lambda^perp| |Zg|^2; the scale was calibrated against
/// the eigenvalues of the explicit frame operator and is fixed here.
double zak_frame_scale(const Subgroup& lattice);

FrameReport zak_frame_bounds(const Window& g, const Subgroup& lattice, double tolerance = kFrameTolerance);

/// Haar integral over the plane (weight 1/|G| per point) of |F|^2. Equals |Lambda| ||f||^2.
double plane_energy(const ZakGrid& grid);

}  // namespace lcagabor
