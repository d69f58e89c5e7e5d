#include "lcagabor/experiments.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/zak.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace lcagabor;

namespace {

Subgroup cyclic(const FiniteLcaGroup& g, std::size_t gen) {
  return Subgroup::generated_by(g, std::span<const std::size_t>(&gen, 1));
}

std::pair<double, double> eigen_bounds(const Window& g, const TfLattice& d) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(frame_operator(g, g, d));
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

}  // namespace

TEST_CASE("Zak transform of delta_0") {
  const FiniteLcaGroup z4({4});
  const ZakGrid all = zak_transform(Window::delta(z4), cyclic(z4, 1));
  for (auto v : all.values) CHECK(std::abs(v) == doctest::Approx(1.0));
  CHECK(min_modulus(all).value == doctest::Approx(1.0));

  Rng rng(2);
  const Window f = Window::random(z4, rng);
  const ZakGrid trivial = zak_transform(f, cyclic(z4, 0));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t w = 0; w < 4; ++w) CHECK(std::abs(trivial.at(TfPoint{x, w}) - f[x]) < 1e-15);
}

TEST_CASE("Zak transform matches the defining sum and is quasi-periodic") {
  const std::vector<int> orders{2, 6};
  const FiniteLcaGroup g(orders);
  Rng rng(4);
  const Window f = Window::random(g, rng);
  const std::size_t gens[] = {g.index(std::vector<int>{0, 2}), g.index(std::vector<int>{1, 3})};
  const Subgroup lambda = Subgroup::generated_by(g, gens);
  const ZakGrid z = zak_transform(f, lambda);
  for (std::size_t x = 0; x < g.cardinality(); ++x)
    for (std::size_t w = 0; w < g.cardinality(); ++w) {
      oracle::C s = 0;
      for (auto l : lambda.elements())
        s += f[oracle::flat(orders, oracle::add(orders, g.coords(x), g.coords(l)))] *
             oracle::character(orders, g.coords(w), g.coords(l));
      CHECK(std::abs(z.at(TfPoint{x, w}) - s) < 1e-12);
    }
  CHECK(quasiperiodicity_residual(z) < 1e-12);
  CHECK(plane_energy(z) == doctest::Approx(static_cast<double>(lambda.size()) * f.norm() * f.norm()));
}

TEST_CASE("Gaussian on Z/16 over 4Z/16: Zak bounds equal the eigenvalue bounds") {
  // The even Gaussian has a Zak zero at the half-period (2, 2), so A = 0.
  const Window g = periodized_gaussian(16);
  const Subgroup lambda = cyclic(g.group(), 4);
  const auto [lo, hi] = eigen_bounds(g, TfLattice::critical(lambda));
  const FrameReport z = zak_frame_bounds(g, lambda);
  CHECK(std::abs(z.lower - lo) < 1e-9);
  CHECK(std::abs(z.upper - hi) < 1e-9);
  CHECK_FALSE(z.is_frame);
  CHECK(min_modulus(zak_transform(g, lambda)).value < 1e-12);
  CHECK(zak_frame_scale(lambda) == doctest::Approx(4.0));
}

TEST_CASE("Zak and eigenvalue bounds agree on random critical lattices") {
  Rng rng(21);
  for (const auto& orders : std::vector<std::vector<int>>{{12}, {2, 4}, {3, 3}}) {
    const FiniteLcaGroup g(orders);
    for (const Subgroup& lambda : all_subgroups(g)) {
      const Window w = Window::random(g, rng);
      const auto [lo, hi] = eigen_bounds(w, TfLattice::critical(lambda));
      const FrameReport z = zak_frame_bounds(w, lambda);
      CHECK(std::abs(z.lower - std::max(lo, 0.0)) < 1e-9 * std::max(1.0, hi));
      CHECK(std::abs(z.upper - hi) < 1e-9 * std::max(1.0, hi));
    }
  }
}

TEST_CASE("a Zak zero means no frame") {
  const FiniteLcaGroup z4({4});
  const Window c(z4, std::vector<Complex>(4, 1.0));
  const Subgroup lambda = cyclic(z4, 2);
  const ZakGrid grid = zak_transform(c, lambda);
  CHECK(min_modulus(grid).value < 1e-15);
  CHECK_FALSE(zak_frame_bounds(c, lambda).is_frame);
  CHECK_FALSE(frame_bounds(c, TfLattice::critical(lambda)).is_frame);
}
