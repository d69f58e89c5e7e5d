#include "lcagabor/gabor.hpp"

#include "lcagabor/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace lcagabor {

std::size_t plane_index(const FiniteLcaGroup& group, TfPoint z) { return z.x * group.cardinality() + z.omega; }

TfPoint plane_point(const FiniteLcaGroup& group, std::size_t idx) {
  return {idx / group.cardinality(), idx % group.cardinality()};
}

// ---------------------------------------------------------------------------
// TfLattice

TfLattice::TfLattice(FiniteLcaGroup group, Subgroup in_plane)
    : group_(std::move(group)), subgroup_(std::move(in_plane)) {
  if (!(subgroup_.parent() == FiniteLcaGroup::plane(group_)))
    throw ShapeMismatch("lattice is not a subgroup of the plane of " + group_.to_string());
  points_.reserve(subgroup_.size());
  for (std::size_t idx : subgroup_.elements()) points_.push_back(plane_point(group_, idx));
  volume_ = lattice_volume(subgroup_, Ambient::plane);
}

TfLattice TfLattice::generated_by(const FiniteLcaGroup& group, std::span<const TfPoint> generators) {
  std::vector<std::size_t> idx;
  for (const TfPoint z : generators) {
    if (z.x >= group.cardinality() || z.omega >= group.cardinality())
      throw ShapeMismatch("plane generator outside " + group.to_string());
    idx.push_back(plane_index(group, z));
  }
  auto plane = FiniteLcaGroup::plane(group);
  return TfLattice(group, Subgroup::generated_by(plane, idx));
}

TfLattice TfLattice::separable(const Subgroup& time, const Subgroup& frequency) {
  require_same_group(time.parent(), frequency.parent());
  const auto& group = time.parent();
  std::vector<std::size_t> elems;
  elems.reserve(time.size() * frequency.size());
  for (std::size_t x : time.elements())
    for (std::size_t w : frequency.elements()) elems.push_back(plane_index(group, {x, w}));
  return TfLattice(group, Subgroup::from_elements(FiniteLcaGroup::plane(group), std::move(elems)));
}

TfLattice TfLattice::critical(const Subgroup& time) { return separable(time, annihilator(time)); }

TfLattice TfLattice::full_time(const FiniteLcaGroup& group) {
  std::vector<std::size_t> all(group.cardinality());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return separable(Subgroup::from_elements(group, all), Subgroup::from_elements(group, {0}));
}

TfLattice TfLattice::full_plane(const FiniteLcaGroup& group) {
  std::vector<std::size_t> all(group.cardinality());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto whole = Subgroup::from_elements(group, all);
  return separable(whole, whole);
}

bool TfLattice::contains(TfPoint z) const { return subgroup_.contains(plane_index(group_, z)); }

// ---------------------------------------------------------------------------
// Time-frequency shifts

Window tf_shift(TfPoint z, const Window& f) {
  if (z.x >= f.size() || z.omega >= f.size()) throw ShapeMismatch("shift outside " + f.group().to_string());
  return Window(f.group(), kernels::tf_shift(f, z));
}

Window tf_shift(const GroupElement& x, const DualElement& omega, const Window& f) {
  const auto& group = f.group();
  if (x.coords.size() != group.rank() || omega.coords.size() != group.rank())
    throw ShapeMismatch("shift coordinates do not match " + group.to_string());
  return tf_shift(TfPoint{group.index(x), group.index(omega)}, f);
}

Complex commutation_defect(const FiniteLcaGroup& group, TfPoint z, TfPoint u) {
  return group.root_of_unity(group.phase(u.omega, z.x) - group.phase(z.omega, u.x));
}

bool commutes(const FiniteLcaGroup& group, TfPoint z, TfPoint u) {
  return group.phase(u.omega, z.x) == group.phase(z.omega, u.x);
}

TfLattice adjoint_lattice(const TfLattice& lattice) {
  const auto& group = lattice.group();
  std::vector<TfPoint> gens;
  for (std::size_t idx : lattice.subgroup().generators()) gens.push_back(plane_point(group, idx));
  std::vector<std::size_t> elems;
  const std::size_t n = group.cardinality();
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const TfPoint z = plane_point(group, idx);
    if (std::all_of(gens.begin(), gens.end(), [&](TfPoint u) { return commutes(group, z, u); }))
      elems.push_back(idx);
  }
  return TfLattice(group, Subgroup::from_elements(FiniteLcaGroup::plane(group), std::move(elems)));
}

// ---------------------------------------------------------------------------
// STFT and S0

PlaneFunction stft(const Window& f, const Window& g) { return {f.group(), kernels::stft(f, g)}; }

double s0_norm(const Window& f, const Window& g) {
  require_same_group(f.group(), g.group());
  if (g.norm() == 0.0) throw InvalidInput("S0 norm needs a nonzero reference window");
  const auto v = kernels::stft(f, g);
  double sum = 0.0;
  for (const auto& c : v) sum += std::abs(c);
  return sum / static_cast<double>(f.size());
}

// ---------------------------------------------------------------------------
// Frame operators

ComplexMatrix frame_operator(const Window& g, const Window& h, const TfLattice& lattice) {
  require_same_group(g.group(), lattice.group());
  return kernels::frame_operator(g, h, lattice.points());
}

std::vector<Complex> janssen_coefficients(const Window& g, const Window& h, const TfLattice& adjoint) {
  require_same_group(g.group(), adjoint.group());
  return kernels::tf_inner_products(h, g, adjoint.points());
}

ComplexMatrix janssen_operator(const Window& g, const Window& h, const TfLattice& lattice) {
  require_same_group(g.group(), lattice.group());
  const TfLattice adjoint = adjoint_lattice(lattice);
  const auto coeffs = janssen_coefficients(g, h, adjoint);
  const double inv_volume = 1.0 / to_double(lattice.volume());
  return kernels::tf_combination(g.group(), adjoint.points(), coeffs, inv_volume);
}

FrameReport FrameReport::from_bounds(double lower, double upper, double tolerance) {
  FrameReport r;
  r.lower = std::max(0.0, lower);
  r.upper = std::max(r.lower, upper);
  r.is_frame = r.lower > tolerance * r.upper;
  if (r.is_frame) r.condition = r.upper / r.lower;
  return r;
}

FrameReport frame_bounds(const Window& g, const TfLattice& lattice, double tolerance) {
  if (g.norm() == 0.0) throw InvalidInput("frame bounds need a nonzero window");
  const ComplexMatrix s = frame_operator(g, g, lattice);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalBreakdown("eigen-solver failed on the frame operator");
  const auto& ev = solver.eigenvalues();
  return FrameReport::from_bounds(ev.minCoeff(), ev.maxCoeff(), tolerance);
}

WexlerRazResult wexler_raz_check(const Window& g, const Window& h, const TfLattice& lattice, double tolerance) {
  require_same_group(g.group(), h.group());
  require_same_group(g.group(), lattice.group());
  const TfLattice adjoint = adjoint_lattice(lattice);
  const auto values = kernels::tf_inner_products(g, h, adjoint.points());
  const double volume = to_double(lattice.volume());
  double residual = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const TfPoint z = adjoint.points()[k];
    const double target = (z.x == 0 && z.omega == 0) ? volume : 0.0;
    residual = std::max(residual, std::abs(values[k] - target));
  }
  return {residual <= tolerance, residual};
}

Window canonical_dual(const Window& g, const TfLattice& lattice) {
  const FrameReport report = frame_bounds(g, lattice);
  if (!report.is_frame) throw NotAFrame("G(g, D) is not a frame; the frame operator is singular");
  const ComplexMatrix s = frame_operator(g, g, lattice);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = g[i];
  Eigen::LDLT<ComplexMatrix> ldlt(s);
  if (ldlt.info() != Eigen::Success) throw NumericalBreakdown("factorization of the frame operator failed");
  const Eigen::VectorXcd h = ldlt.solve(rhs);
  return Window(g.group(), std::vector<Complex>(h.data(), h.data() + h.size()));
}

DensityVerdict density_check(const TfLattice& lattice) {
  const Rational& vol = lattice.volume();
  DensityClass c = vol < 1 ? DensityClass::oversampled : (vol == 1 ? DensityClass::critical : DensityClass::frame_impossible);
  return {vol, c};
}

const char* to_string(DensityClass c) {
  switch (c) {
    case DensityClass::oversampled: return "oversampled";
    case DensityClass::critical: return "critical";
    case DensityClass::frame_impossible: return "frame impossible";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Orthonormal basis constructions

bool is_orthonormal_basis(const Window& g, const TfLattice& lattice, double tolerance) {
  if (lattice.size() != g.size()) return false;
  const ComplexMatrix s = frame_operator(g, g, lattice);
  const auto n = static_cast<Eigen::Index>(g.size());
  return (s - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tolerance;
}

TfLattice product_lattice(const TfLattice& lattice1, const TfLattice& lattice2) {
  const auto& g1 = lattice1.group();
  const auto& g2 = lattice2.group();
  const auto group = FiniteLcaGroup::product(g1, g2);
  const std::size_t n2 = g2.cardinality();
  std::vector<TfPoint> gens;
  for (std::size_t idx : lattice1.subgroup().generators()) {
    const TfPoint z = plane_point(g1, idx);
    gens.push_back({z.x * n2, z.omega * n2});
  }
  for (std::size_t idx : lattice2.subgroup().generators()) gens.push_back(plane_point(g2, idx));
  return TfLattice::generated_by(group, gens);
}

TensorSystem tensor_onb(const Window& g1, const TfLattice& lattice1, const Window& g2, const TfLattice& lattice2) {
  require_same_group(g1.group(), lattice1.group());
  require_same_group(g2.group(), lattice2.group());
  if (!is_orthonormal_basis(g1, lattice1) || !is_orthonormal_basis(g2, lattice2))
    throw InvalidInput("tensor_onb needs two orthonormal Gabor bases");
  return {tensor(g1, g2), product_lattice(lattice1, lattice2)};
}

Window lift_finite_index(const Subgroup& subgroup, std::span<const Complex> g_on_h,
                         std::span<const std::size_t> coset_reps) {
  const auto& group = subgroup.parent();
  if (g_on_h.size() != subgroup.size()) throw ShapeMismatch("window on H must have |H| values");
  const std::size_t k = coset_reps.size();
  if (k * subgroup.size() != group.cardinality())
    throw InvalidInput("coset representatives are not a transversal of G/H");
  std::vector<Complex> out(group.cardinality());
  std::vector<bool> hit(group.cardinality(), false);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t y : coset_reps) {
    if (y >= group.cardinality()) throw ShapeMismatch("coset representative outside the group");
    const auto elems = subgroup.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const std::size_t t = group.add(elems[i], y);
      if (hit[t]) throw InvalidInput("coset representatives are not a transversal of G/H");
      hit[t] = true;
      out[t] = scale * g_on_h[i];
    }
  }
  return Window(group, std::move(out));
}

Window push_finite_subgroup(const Subgroup& finite, const Subgroup& lattice, std::span<const Complex> g_on_quotient) {
  require_same_group(finite.parent(), lattice.parent());
  for (std::size_t f : finite.elements()) {
    if (!lattice.contains(f)) throw InvalidInput("F is not contained in the lattice");
  }
  const auto& group = finite.parent();
  const auto cosets = coset_representatives(finite);
  if (g_on_quotient.size() != cosets.size()) throw ShapeMismatch("window on G/F must have |G/F| values");

  // G/F pairs with F^perp; unitary transform onto F^perp.
  const Subgroup fperp = annihilator(finite);
  const double scale = 1.0 / std::sqrt(static_cast<double>(cosets.size()));
  std::vector<Complex> ghat;
  ghat.reserve(fperp.size());
  for (std::size_t xi : fperp.elements()) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < cosets.size(); ++c) s += g_on_quotient[c] * std::conj(group.pairing(xi, cosets[c]));
    ghat.push_back(scale * s);
  }
  const auto dual_reps = coset_representatives(fperp);
  const Window gamma = lift_finite_index(fperp, ghat, dual_reps);
  Window out = unitary_inverse_fourier_transform(gamma);
  if (!is_orthonormal_basis(out, TfLattice::critical(lattice)))
    throw InvalidInput("window on G/F does not generate an orthonormal basis over the pushed lattice");
  return out;
}

}  // namespace lcagabor
