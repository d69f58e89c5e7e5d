#pragma once

// Gabor systems G(g, D) = { pi(z) g : z in D } over subgroups D of the
// time-frequency plane G x G^, with pi(x,w) = M_w T_x:
//   (pi(x,w) f)(t) = w(t) f(t - x).
// Inner products use counting measure on G; the plane carries the product of
// counting measure and the 1/|G| dual weight, so vol(D) = |G| / |D|.

#include "lcagabor/finite_lca.hpp"
#include "lcagabor/kernels.hpp"
#include "lcagabor/rational.hpp"
#include "lcagabor/window.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lcagabor {

/// A frame is declared when A > kFrameTolerance * B.
inline constexpr double kFrameTolerance = 1e-9;
/// Default Wexler-Raz residual threshold.
inline constexpr double kWexlerRazTolerance = 1e-9;

/// Subgroup of the time-frequency plane of `group()`.
class TfLattice {
 public:
  TfLattice(FiniteLcaGroup group, Subgroup in_plane);

  static TfLattice generated_by(const FiniteLcaGroup& group, std::span<const TfPoint> generators);
  /// Lambda x Gamma for a subgroup Lambda of G and Gamma of G^.
  static TfLattice separable(const Subgroup& time, const Subgroup& frequency);
  /// Lambda x Lambda^perp (volume 1).
  static TfLattice critical(const Subgroup& time);
  /// G x {0}.
  static TfLattice full_time(const FiniteLcaGroup& group);
  /// The whole plane.
  static TfLattice full_plane(const FiniteLcaGroup& group);

  const FiniteLcaGroup& group() const { return group_; }
  const Subgroup& subgroup() const { return subgroup_; }
  std::size_t size() const { return subgroup_.size(); }
  const std::vector<TfPoint>& points() const { return points_; }
  bool contains(TfPoint z) const;
  /// |G| / |D|, exact.
  const Rational& volume() const { return volume_; }

  friend bool operator==(const TfLattice& a, const TfLattice& b) { return a.subgroup_ == b.subgroup_; }

 private:
  FiniteLcaGroup group_;
  Subgroup subgroup_;
  std::vector<TfPoint> points_;
  Rational volume_;
};

std::size_t plane_index(const FiniteLcaGroup& group, TfPoint z);
TfPoint plane_point(const FiniteLcaGroup& group, std::size_t plane_index);

Window tf_shift(const GroupElement& x, const DualElement& omega, const Window& f);
Window tf_shift(TfPoint z, const Window& f);

/// tau(x) conj(w(y)) for z = (x,w), u = (y,tau); pi(u) pi(z) = defect * pi(z) pi(u).
Complex commutation_defect(const FiniteLcaGroup& group, TfPoint z, TfPoint u);
/// Exact test of commutation_defect == 1.
bool commutes(const FiniteLcaGroup& group, TfPoint z, TfPoint u);

/// D° = { z : pi(z) commutes with pi(u) for every u in D }.
TfLattice adjoint_lattice(const TfLattice& lattice);

/// V_g f on the plane, plane index = x * |G| + w.
struct PlaneFunction {
  FiniteLcaGroup group;
  std::vector<Complex> values;
  Complex at(TfPoint z) const { return values[z.x * group.cardinality() + z.omega]; }
};

PlaneFunction stft(const Window& f, const Window& g);

/// (1/|G|) sum_{x,w} |V_g f(x,w)|. Throws InvalidInput for g = 0.
double s0_norm(const Window& f, const Window& g);

/// S_{g,h,D} f = sum_{z in D} <f, pi(z) g> pi(z) h, as an explicit |G| x |G| matrix.
ComplexMatrix frame_operator(const Window& g, const Window& h, const TfLattice& lattice);

/// <h, pi(z) g> for z in D°, in the order of adjoint.points().
std::vector<Complex> janssen_coefficients(const Window& g, const Window& h, const TfLattice& adjoint);

/// vol(D)^{-1} sum_{z in D°} <h, pi(z) g> pi(z).
ComplexMatrix janssen_operator(const Window& g, const Window& h, const TfLattice& lattice);

struct FrameReport {
  double lower = 0.0;  ///< A, smallest eigenvalue of S_{g,D}, clipped at 0
  double upper = 0.0;  ///< B, largest eigenvalue
  bool is_frame = false;
  std::optional<double> condition;  ///< B / A when A > 0

  static FrameReport from_bounds(double lower, double upper, double tolerance = kFrameTolerance);
};

FrameReport frame_bounds(const Window& g, const TfLattice& lattice, double tolerance = kFrameTolerance);

struct WexlerRazResult {
  bool holds = false;
  double residual = 0.0;  ///< max_{z in D°} |<g, pi(z) h> - vol(D) delta_{z,0}|
};

/// Dual-window test on the adjoint lattice. The constant is vol(D): for
/// g = h = delta_0 on the full Z/2 plane, S = 2I, so h = delta_0/2 is the
/// dual and <g, h> = 1/2 = vol(D). (Written vol(D)^{-1} in some sources; the
/// brute-force frame operator rules that out.)
WexlerRazResult wexler_raz_check(const Window& g, const Window& h, const TfLattice& lattice,
                                 double tolerance = kWexlerRazTolerance);

/// h = S_{g,D}^{-1} g. Throws NotAFrame when S is singular.
Window canonical_dual(const Window& g, const TfLattice& lattice);

enum class DensityClass { oversampled, critical, frame_impossible };

struct DensityVerdict {
  Rational volume;
  DensityClass verdict;
};

DensityVerdict density_check(const TfLattice& lattice);
const char* to_string(DensityClass c);

/// True when G(g, D) is an orthonormal basis: |D| = |G| and S_{g,D} = I.
bool is_orthonormal_basis(const Window& g, const TfLattice& lattice, double tolerance = 1e-9);

struct TensorSystem {
  Window window;
  TfLattice lattice;
};

/// g1 (x) g2 over D1 x D2 in the plane of G1 x G2. Both inputs must be ONBs.
TensorSystem tensor_onb(const Window& g1, const TfLattice& lattice1, const Window& g2, const TfLattice& lattice2);

/// D1 x D2 with plane coordinates reordered to (x1, x2, w1, w2).
TfLattice product_lattice(const TfLattice& lattice1, const TfLattice& lattice2);

/// Lift from a finite-index subgroup H: g~(x + y_j) = g(x) / sqrt(k).
/// `g_on_h` is indexed by H's sorted element list; `coset_reps` must be a transversal of G/H.
Window lift_finite_index(const Subgroup& subgroup, std::span<const Complex> g_on_h,
                         std::span<const std::size_t> coset_reps);

/// Push an ONB window from G/F to G for a finite subgroup F of Lambda, via the
/// Fourier side: transform to F^perp, lift to G^, transform back.
/// `g_on_quotient` is indexed by coset_representatives(F). The result is
/// checked to give an ONB over Lambda x Lambda^perp; throws InvalidInput if not.
Window push_finite_subgroup(const Subgroup& finite, const Subgroup& lattice, std::span<const Complex> g_on_quotient);

}  // namespace lcagabor
