#include "lcagabor/errors.hpp"
#include "lcagabor/gabor.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace lcagabor;

namespace {

std::vector<oracle::C> vec(const Window& w) { return {w.values().begin(), w.values().end()}; }

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

Subgroup cyclic(const FiniteLcaGroup& g, std::size_t gen) {
  return Subgroup::generated_by(g, std::span<const std::size_t>(&gen, 1));
}

std::vector<oracle::PlanePoint> oracle_points(const TfLattice& l) {
  std::vector<oracle::PlanePoint> out;
  for (auto z : l.points()) out.push_back({l.group().coords(z.x), l.group().coords(z.omega)});
  return out;
}

}  // namespace

TEST_CASE("tf_shift of delta_0 is w(x) delta_x") {
  const FiniteLcaGroup z4({4});
  const Window d = Window::delta(z4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t w = 0; w < 4; ++w) {
      const Window s = tf_shift(GroupElement{{static_cast<int>(x)}}, DualElement{{static_cast<int>(w)}}, d);
      for (std::size_t t = 0; t < 4; ++t)
        CHECK(std::abs(s[t] - (t == x ? z4.pairing(w, x) : Complex(0.0))) < 1e-15);
    }
}

TEST_CASE("tf_shift matches the oracle on Z3xZ2") {
  const std::vector<int> orders{3, 2};
  const FiniteLcaGroup g(orders);
  Rng rng(1);
  const Window f = Window::random(g, rng);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t w = 0; w < 6; ++w) {
      const Window s = tf_shift(TfPoint{x, w}, f);
      const auto o = oracle::shift(orders, vec(f), g.coords(x), g.coords(w));
      for (std::size_t t = 0; t < 6; ++t) CHECK(std::abs(s[t] - o[t]) < 1e-14);
    }
}

TEST_CASE("commutation defect") {
  const FiniteLcaGroup z4({4});
  CHECK(commutation_defect(z4, TfPoint{1, 0}, TfPoint{0, 1}) == Complex(0, 1));
  CHECK(commutes(z4, TfPoint{2, 0}, TfPoint{0, 2}));
  CHECK_FALSE(commutes(z4, TfPoint{1, 0}, TfPoint{0, 1}));

  // pi(u) pi(z) = defect * pi(z) pi(u), checked on a random vector.
  const FiniteLcaGroup g({2, 3});
  Rng rng(9);
  const Window f = Window::random(g, rng);
  for (std::size_t i = 0; i < 36; i += 5)
    for (std::size_t j = 0; j < 36; j += 7) {
      const TfPoint z = plane_point(g, i), u = plane_point(g, j);
      const Window lhs = tf_shift(u, tf_shift(z, f));
      const Window rhs = commutation_defect(g, z, u) * tf_shift(z, tf_shift(u, f));
      for (std::size_t t = 0; t < 6; ++t) CHECK(std::abs(lhs[t] - rhs[t]) < 1e-13);
    }
}

TEST_CASE("adjoint lattice examples") {
  const FiniteLcaGroup z4({4});
  const TfLattice sep = TfLattice::separable(cyclic(z4, 2), cyclic(z4, 2));
  CHECK(adjoint_lattice(sep) == sep);
  CHECK(sep.volume() == 1);

  const FiniteLcaGroup z2({2});
  const TfLattice full = TfLattice::full_plane(z2);
  CHECK(adjoint_lattice(full).size() == 1);
  CHECK(adjoint_lattice(TfLattice::full_time(z4)) == TfLattice::full_time(z4));
}

TEST_CASE("adjoint is an involution with |D||D°| = |G|^2 on every subgroup of the Z/6 plane") {
  const FiniteLcaGroup z6({6});
  const FiniteLcaGroup plane = FiniteLcaGroup::plane(z6);
  for (const Subgroup& s : all_subgroups(plane)) {
    const TfLattice d(z6, s);
    const TfLattice a = adjoint_lattice(d);
    CHECK(d.size() * a.size() == 36);
    CHECK(adjoint_lattice(a) == d);
    for (auto z : a.points())
      for (auto u : d.points()) CHECK(commutes(z6, z, u));
  }
}

TEST_CASE("frame operator examples") {
  const FiniteLcaGroup z4({4});
  const Window d = Window::delta(z4);
  CHECK(max_abs(frame_operator(d, d, TfLattice::full_time(z4)) - ComplexMatrix::Identity(4, 4)) < 1e-15);

  const FiniteLcaGroup z2({2});
  const Window d2 = Window::delta(z2);
  CHECK(max_abs(frame_operator(d2, d2, TfLattice::full_plane(z2)) - 2.0 * ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("frame operator and Janssen form agree with the oracle") {
  const std::vector<int> orders{6};
  const FiniteLcaGroup z6(orders);
  Rng rng(13);
  const Window g = Window::random(z6, rng);
  const Window h = Window::random(z6, rng);
  const FiniteLcaGroup plane = FiniteLcaGroup::plane(z6);
  for (const Subgroup& s : all_subgroups(plane)) {
    const TfLattice d(z6, s);
    const ComplexMatrix fo = frame_operator(g, h, d);
    const auto want = oracle::frame_operator(orders, vec(g), vec(h), oracle_points(d));
    double diff = 0.0;
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c)
        diff = std::max(diff, std::abs(fo(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - want[r * 6 + c]));
    CHECK(diff < 1e-12);
    CHECK(max_abs(fo - janssen_operator(g, h, d)) < 1e-11);
  }
}

TEST_CASE("frame bounds and density") {
  const FiniteLcaGroup z4({4});
  const FrameReport r = frame_bounds(Window::delta(z4), TfLattice::full_time(z4));
  CHECK(r.is_frame);
  CHECK(r.lower == doctest::Approx(1.0));
  CHECK(r.upper == doctest::Approx(1.0));
  REQUIRE(r.condition);
  CHECK(*r.condition == doctest::Approx(1.0));

  const TfLattice sparse = TfLattice::separable(cyclic(z4, 2), cyclic(z4, 0));
  CHECK(density_check(sparse).verdict == DensityClass::frame_impossible);
  CHECK(density_check(sparse).volume == 2);
  CHECK_FALSE(frame_bounds(Window::constant(z4), sparse).is_frame);
  CHECK(density_check(TfLattice::full_plane(z4)).verdict == DensityClass::oversampled);
  CHECK(density_check(TfLattice::full_time(z4)).verdict == DensityClass::critical);
  CHECK(std::string(to_string(DensityClass::critical)) == "critical");
}

TEST_CASE("Wexler-Raz examples") {
  const FiniteLcaGroup z2({2});
  const TfLattice full = TfLattice::full_plane(z2);
  const Window d = Window::delta(z2);
  const Window half = Complex(0.5) * d;
  CHECK(wexler_raz_check(d, half, full).holds);
  CHECK(max_abs(frame_operator(d, half, full) - ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK_FALSE(wexler_raz_check(d, d, full).holds);

  const FiniteLcaGroup z4({4});
  const Window dz = Window::delta(z4);
  CHECK(wexler_raz_check(dz, dz, TfLattice::full_time(z4)).holds);
  CHECK(wexler_raz_check(dz, dz, TfLattice::full_time(z4)).residual < 1e-15);
}

TEST_CASE("Wexler-Raz agrees with S = I on random small instances") {
  const FiniteLcaGroup z6({6});
  const FiniteLcaGroup plane = FiniteLcaGroup::plane(z6);
  Rng rng(17);
  int duals = 0;
  for (const Subgroup& s : all_subgroups(plane)) {
    const TfLattice d(z6, s);
    const Window g = Window::random(z6, rng);
    if (!frame_bounds(g, d).is_frame) {
      CHECK_THROWS_AS(canonical_dual(g, d), NotAFrame);
      continue;
    }
    const Window h = canonical_dual(g, d);
    CHECK(wexler_raz_check(g, h, d).holds);
    CHECK(max_abs(frame_operator(g, h, d) - ComplexMatrix::Identity(6, 6)) < 1e-9);
    const Window bad = h.perturbed(0, Complex(1e-3, 0));
    CHECK_FALSE(wexler_raz_check(g, bad, d).holds);
    ++duals;
  }
  CHECK(duals > 0);
}

TEST_CASE("s0 norm") {
  const FiniteLcaGroup z4({4});
  const Window d = Window::delta(z4);
  // |V_d d| is 1 on {0} x G^, so (1/|G|) * |G| = 1.
  CHECK(s0_norm(d, d) == doctest::Approx(1.0));
  CHECK_THROWS_AS(s0_norm(d, Window::zeros(z4)), InvalidInput);
  const PlaneFunction v = stft(d, d);
  CHECK(std::abs(v.at(TfPoint{0, 3}) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(v.at(TfPoint{1, 0})) < 1e-15);
}

TEST_CASE("orthonormal bases: lift, push and tensor") {
  const FiniteLcaGroup z8({8});
  CHECK(is_orthonormal_basis(Window::delta(z8), TfLattice::full_time(z8), 1e-12));

  const FiniteLcaGroup z4({4});
  const Subgroup h = cyclic(z4, 2);
  const std::vector<Complex> delta_on_h{1.0, 0.0};
  const std::vector<std::size_t> reps{0, 1};
  const Window lifted = lift_finite_index(h, delta_on_h, reps);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(lifted[0] - r) < 1e-15);
  CHECK(std::abs(lifted[1] - r) < 1e-15);
  CHECK(std::abs(lifted[2]) < 1e-15);
  CHECK(std::abs(lifted[3]) < 1e-15);
  CHECK(is_orthonormal_basis(lifted, TfLattice::critical(h), 1e-12));

  // F = Lambda = {0,2}: G/F = Z/2 with trivial image lattice, so the constant.
  const std::vector<Complex> c2{r, r};
  const Window p1 = push_finite_subgroup(h, h, c2);
  CHECK(is_orthonormal_basis(p1, TfLattice::critical(h), 1e-12));
  // F = {0,2} inside Lambda = Z/4: Lambda/F is all of G/F, so delta_0.
  const Subgroup all = cyclic(z4, 1);
  const std::vector<Complex> d2{1.0, 0.0};
  const Window p2 = push_finite_subgroup(h, all, d2);
  CHECK(is_orthonormal_basis(p2, TfLattice::critical(all), 1e-12));
  CHECK_THROWS_AS(push_finite_subgroup(h, all, c2), InvalidInput);
  CHECK_THROWS_AS(push_finite_subgroup(all, h, d2), InvalidInput);

  const FiniteLcaGroup z2({2}), z3({3});
  const TensorSystem t =
      tensor_onb(Window::delta(z2), TfLattice::full_time(z2), Window::delta(z3), TfLattice::full_time(z3));
  CHECK(t.window.group().to_string() == "Z2xZ3");
  CHECK(t.lattice.size() == 6);
  CHECK(is_orthonormal_basis(t.window, t.lattice, 1e-12));
  CHECK_THROWS(tensor_onb(Window::constant(z2), TfLattice::full_time(z2), Window::delta(z3),
                          TfLattice::full_time(z3)));
}

TEST_CASE("product lattice coordinates") {
  const FiniteLcaGroup z2({2}), z3({3});
  const TfLattice p = product_lattice(TfLattice::full_plane(z2), TfLattice::full_time(z3));
  CHECK(p.size() == 4 * 3);
  CHECK(p.volume() == Rational(6, 12));
  const FiniteLcaGroup& g = p.group();
  for (auto z : p.points()) CHECK(g.coords(z.omega)[1] == 0);
}
