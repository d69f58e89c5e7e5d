#include "lcagabor/errors.hpp"
#include "lcagabor/window.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace lcagabor;

TEST_CASE("Fourier transform of delta and of the all-ones function") {
  const FiniteLcaGroup z6({6});
  const Window d = fourier_transform(Window::delta(z6));
  for (std::size_t w = 0; w < 6; ++w) CHECK(std::abs(d[w] - Complex(1.0)) < 1e-15);

  const Window ones(z6, std::vector<Complex>(6, 1.0));
  const Window f = fourier_transform(ones);
  CHECK(std::abs(f[0] - Complex(6.0)) < 1e-12);
  for (std::size_t w = 1; w < 6; ++w) CHECK(std::abs(f[w]) < 1e-12);
}

TEST_CASE("Plancherel and inversion on Z/6 and Z2xZ4") {
  Rng rng(7);
  for (const auto& orders : std::vector<std::vector<int>>{{6}, {2, 4}}) {
    const FiniteLcaGroup g(orders);
    const Window f = Window::random(g, rng);
    const Window h = Window::random(g, rng);
    const Window fh = fourier_transform(f);
    const Window hh = fourier_transform(h);
    const double n = static_cast<double>(g.cardinality());
    CHECK(std::abs(inner(fh, hh) / n - inner(f, h)) < 1e-12);
    const Window back = inverse_fourier_transform(fh);
    for (std::size_t t = 0; t < g.cardinality(); ++t) CHECK(std::abs(back[t] - f[t]) < 1e-12);
    CHECK(std::abs(unitary_fourier_transform(f).norm() - f.norm()) < 1e-12);
    const Window u = unitary_inverse_fourier_transform(unitary_fourier_transform(f));
    for (std::size_t t = 0; t < g.cardinality(); ++t) CHECK(std::abs(u[t] - f[t]) < 1e-12);
  }
}

TEST_CASE("Fourier transform matches the character sum") {
  const std::vector<int> orders{3, 4};
  const FiniteLcaGroup g(orders);
  Rng rng(11);
  const Window f = Window::random(g, rng);
  const Window fh = fourier_transform(f);
  for (const auto& w : oracle::all_elements(orders)) {
    oracle::C s = 0;
    for (const auto& t : oracle::all_elements(orders))
      s += f[oracle::flat(orders, t)] * std::conj(oracle::character(orders, w, t));
    CHECK(std::abs(fh[oracle::flat(orders, w)] - s) < 1e-12);
  }
}

TEST_CASE("window basics") {
  const FiniteLcaGroup z4({4});
  CHECK(Window::constant(z4).norm() == doctest::Approx(1.0));
  CHECK(Window::delta(z4, 3)[3] == Complex(1.0));
  CHECK_THROWS_AS(Window::delta(z4, 4), ShapeMismatch);
  CHECK_THROWS_AS(Window(z4, std::vector<Complex>(3)), ShapeMismatch);
  CHECK_THROWS_AS(Window(z4, std::vector<Complex>(4, Complex(NAN, 0))), InvalidInput);
  CHECK_THROWS_AS(Window::zeros(z4).normalized(), InvalidInput);
  CHECK_THROWS_AS(inner(Window::zeros(z4), Window::zeros(FiniteLcaGroup({2, 2}))), ShapeMismatch);
  const Window p = Window::zeros(z4).perturbed(1, Complex(0, 2));
  CHECK(p[1] == Complex(0, 2));
  CHECK(p.normalized()[1] == Complex(0, 1));
  CHECK(((Window::delta(z4, 0) + Window::delta(z4, 1)) - Window::delta(z4, 1))[0] == Complex(1.0));

  Rng a(3), b(3);
  const Window ra = Window::random(z4, a);
  const Window rb = Window::random(z4, b);
  for (std::size_t i = 0; i < 4; ++i) CHECK(ra[i] == rb[i]);
}

TEST_CASE("tensor product indexing") {
  const FiniteLcaGroup z2({2}), z3({3});
  const Window g1(z2, {1.0, 2.0});
  const Window g2(z3, {1.0, Complex(0, 1), 3.0});
  const Window t = tensor(g1, g2);
  CHECK(t.group().to_string() == "Z2xZ3");
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(t[a * 3 + b] == g1[a] * g2[b]);
}
