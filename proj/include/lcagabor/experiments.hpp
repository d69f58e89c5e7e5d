#pragma once

// Reproducible numeric experiments. Every report is a pure function of its
// parameters (including the seed), so CSV output is bit-identical across runs.

#include "lcagabor/finite_lca.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/random.hpp"
#include "lcagabor/window.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lcagabor {

struct SweepAssertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SweepReport {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<SweepAssertion> assertions;

  bool all_passed() const;
  /// Header row, then one row per grid point, values as %.17g.
  std::string to_csv() const;
  /// Column lookup by name; throws InvalidInput if absent.
  std::vector<double> column(const std::string& name) const;
};

/// Sampled periodization of exp(-pi t^2) on Z/L with unit l2 norm.
Window periodized_gaussian(int length);

/// Perturbs g along one seeded direction of unit S0 norm and records frame
/// bounds, ||S' - S||_2 and the Janssen-side bound
/// vol^{-1} sum_{z in D°} |<g', pi(z) g'> - <g, pi(z) g>| for each eps.
/// `epsilons` must be strictly increasing; g must give a frame.
SweepReport window_stability_sweep(const Window& g, const TfLattice& lattice, const std::vector<double>& epsilons,
                                   std::uint64_t seed = 0);

/// Periodized Gaussian on Z/n^2 over (nZ/n^2) x (nZ/n^2)^perp, with a control
/// lattice of volume 1/2 on Z/2n^2 (time and frequency step n).
SweepReport critical_density_trend(const std::vector<int>& ns);

/// Every subgroup of the plane of `group`, tested with `windows_per_lattice`
/// seeded random windows. Critical separable lattices are cross-checked
/// against the Zak criterion with delta_0, the constant and the random windows.
struct GaborInstance {
  Window g;
  Window h;
  TfLattice lattice;
};

/// Seeded random group with |G| <= max_order (rank 1 or 2), two random
/// windows and a plane subgroup generated by one or two random points.
GaborInstance random_gabor_instance(Rng& rng, std::size_t max_order = 36);

/// max |S_{g,h,D} - J_{g,h,D}| over matrix entries, frame operator against Janssen form.
double janssen_discrepancy(const Window& g, const Window& h, const TfLattice& lattice);

SweepReport density_exhaustive(const FiniteLcaGroup& group, int windows_per_lattice = 20, std::uint64_t seed = 0,
                               std::size_t subgroup_cap = 20000);

}  // namespace lcagabor
