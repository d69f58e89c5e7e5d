#include "lcagabor/adeles.hpp"
#include "lcagabor/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lcagabor;

namespace {

AdeleLattice scalar_lattice(const PlaceSet& s, Rational inf, std::map<std::int64_t, Rational> fin) {
  std::map<std::int64_t, RationalMatrix> m;
  for (auto& [p, v] : fin) m.emplace(p, RationalMatrix::diagonal({v}));
  return AdeleLattice(AdeleAutomorphism(s, RationalMatrix::diagonal({inf}), m));
}

Rational small_rational(std::mt19937_64& rng) {
  static const long long dens[] = {1, 1, 1, 2, 3, 4, 5, 6};
  const long long num = static_cast<long long>(rng() % 9) - 4;
  return Rational(num, dens[rng() % 8]);
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = small_rational(rng);
    if (m.determinant() != 0) return m;
  }
}

}  // namespace

TEST_CASE("place sets") {
  const PlaceSet s({3, 2});
  CHECK(s.primes() == std::vector<std::int64_t>{2, 3});
  CHECK(s.is_s_integer(Rational(5, 12)));
  CHECK_FALSE(s.is_s_integer(Rational(1, 5)));
  CHECK(s.is_s_unit(Rational(-9, 8)));
  CHECK_FALSE(s.is_s_unit(Rational(5, 8)));
  CHECK_FALSE(s.is_s_unit(Rational(0)));
  CHECK_THROWS_AS(PlaceSet({2, 2}), InvalidInput);
  CHECK_THROWS_AS(PlaceSet({4}), InvalidInput);
}

TEST_CASE("automorphism validation") {
  const PlaceSet s({2});
  std::map<std::int64_t, RationalMatrix> outside{{3, RationalMatrix::identity(1)}};
  CHECK_THROWS_AS(AdeleAutomorphism(s, RationalMatrix::identity(1), outside), InvalidInput);
  std::map<std::int64_t, RationalMatrix> wrong{{2, RationalMatrix::identity(2)}};
  CHECK_THROWS_AS(AdeleAutomorphism(s, RationalMatrix::identity(1), wrong), ShapeMismatch);
  CHECK_THROWS_AS(AdeleAutomorphism(s, RationalMatrix(1, 1)), SingularMatrix);
  const auto a = AdeleAutomorphism::diagonal_scalar(s, 2, Rational(3));
  CHECK(a.compose(a.inverse()).at_prime(2) == RationalMatrix::identity(2));
  CHECK(*a.compose(a.inverse()).infinite_exact() == RationalMatrix::identity(2));
}

TEST_CASE("membership in the base S-integer lattice") {
  const AdeleLattice base = AdeleLattice::base(PlaceSet({2}), 1);
  const auto yes = lattice_membership(AdeleVector::diagonal(base.places(), {Rational(5, 2)}), base);
  CHECK(yes.member);
  REQUIRE(yes.witness);
  CHECK(yes.witness->at(0) == Rational(5, 2));
  CHECK_FALSE(lattice_membership(AdeleVector::diagonal(base.places(), {Rational(1, 3)}), base).member);

  AdeleVector bad = AdeleVector::diagonal(base.places(), {Rational(1)});
  bad.finite[3] = {Rational(1)};
  CHECK_THROWS_AS(lattice_membership(bad, base), InvalidInput);
  AdeleVector missing{{Rational(1)}, {}};
  CHECK_THROWS_AS(lattice_membership(missing, base), InvalidInput);
}

TEST_CASE("membership with different real and 2-adic components") {
  const PlaceSet s({2});
  const AdeleLattice l = scalar_lattice(s, Rational(2), {{2, Rational(1)}});
  const auto hit = lattice_membership(AdeleVector{{Rational(2)}, {{2, {Rational(1)}}}}, l);
  CHECK(hit.member);
  CHECK(hit.witness->at(0) == 1);
  CHECK_FALSE(lattice_membership(AdeleVector{{Rational(1)}, {{2, {Rational(1)}}}}, l).member);

  const AdeleLattice floating(AdeleAutomorphism(s, Eigen::MatrixXd::Identity(1, 1)));
  CHECK_THROWS_AS(lattice_membership(AdeleVector::diagonal(s, {Rational(1)}), floating), InvalidInput);
}

TEST_CASE("lattice equality examples") {
  const PlaceSet s({2});
  const AdeleLattice base = AdeleLattice::base(s, 1);
  CHECK(lattice_equality(base, scalar_lattice(s, Rational(2), {{2, Rational(2)}})));
  CHECK_FALSE(lattice_equality(base, scalar_lattice(s, Rational(2), {{2, Rational(1)}})));
  CHECK_FALSE(lattice_equality(base, scalar_lattice(s, Rational(3), {{2, Rational(3)}})));
  CHECK(lattice_equality(base, scalar_lattice(s, Rational(-1, 4), {{2, Rational(-1, 4)}})));
}

TEST_CASE("both equality routes agree on random lattices") {
  std::mt19937_64 rng(5);
  const PlaceSet s({2, 3});
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 2;
    const RationalMatrix a1 = random_invertible(rng, n);
    const AdeleLattice l1(AdeleAutomorphism(s, a1, {{2, a1}, {3, a1}}));
    // Half the cases apply a unimodular-over-Z(S) change of basis, the rest a random one.
    RationalMatrix r = (i % 2 == 0) ? RationalMatrix::identity(n) : random_invertible(rng, n);
    if (i % 2 == 0) {
      r(0, 0) = Rational((rng() % 2) ? 2 : -3);
      if (n == 2) r(0, 1) = Rational(static_cast<long long>(rng() % 5));
    }
    const RationalMatrix a2 = a1 * r;
    const RationalMatrix a2p = (i % 4 == 1) ? a1 : a2;
    const AdeleLattice l2(AdeleAutomorphism(s, a2, {{2, a2}, {3, a2p}}));
    const bool semantic = lattice_equality(l1, l2);
    CHECK(semantic == lattice_equality_by_generators(l1, l2));
    equal += semantic ? 1 : 0;
  }
  CHECK(equal >= 50);
}

TEST_CASE("global modular function") {
  const PlaceSet s({3});
  const AdeleLattice l = scalar_lattice(s, Rational(3), {{3, Rational(3)}});
  const ModularValue m = lattice_volume(l);
  REQUIRE(m.exact_value);
  CHECK(*m.exact_value == 1);
  CHECK(m.finite_part == Rational(1, 3));
  CHECK(m.value == doctest::Approx(1.0));

  const double eps = 0.125;
  const auto scaled = AdeleAutomorphism::identity(PlaceSet({2}), 2).scale_infinite(1.0 + eps);
  CHECK(global_modular(scaled).value == doctest::Approx((1 + eps) * (1 + eps)));
  CHECK_FALSE(global_modular(scaled).exact_value.has_value());

  // Homomorphism on compositions.
  const AdeleAutomorphism a = AdeleAutomorphism::diagonal_scalar(s, 2, Rational(5, 3));
  const AdeleAutomorphism b(s, RationalMatrix({{Rational(1), Rational(2)}, {Rational(0), Rational(9)}}),
                            {{3, RationalMatrix::diagonal({Rational(1, 3), Rational(1)})}});
  CHECK(*global_modular(a.compose(b)).exact_value == *global_modular(a).exact_value * *global_modular(b).exact_value);
}

TEST_CASE("volume scales by the modular value") {
  std::mt19937_64 rng(12);
  const PlaceSet s({2, 5});
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const AdeleLattice l(AdeleAutomorphism(s, random_invertible(rng, n), {{5, random_invertible(rng, n)}}));
    const AdeleAutomorphism alpha(s, random_invertible(rng, n), {{2, random_invertible(rng, n)}});
    CHECK(*lattice_volume(l.image(alpha)).exact_value ==
          *global_modular(alpha).exact_value * *lattice_volume(l).exact_value);
  }
  // det A_inf = +-1: the value is the exact finite part.
  const AdeleAutomorphism u(s, RationalMatrix({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}),
                            {{2, RationalMatrix::diagonal({Rational(4), Rational(1, 2)})}});
  CHECK(*global_modular(u).exact_value == Rational(1, 2));
}

TEST_CASE("deformation margins") {
  CHECK(*deformation_margin(Rational(1, 4), 1).exact == 1);
  CHECK(*deformation_margin(Rational(1), 3).exact == 0);
  CHECK(deformation_margin(Rational(1), 3).value == 0.0);
  const DeformationMargin half = deformation_margin(Rational(1, 2), 1);
  CHECK_FALSE(half.exact.has_value());
  CHECK(half.value == doctest::Approx(std::sqrt(2.0) - 1.0));
  CHECK(*deformation_margin(Rational(1, 81), 2).exact == 2);
  CHECK_THROWS_AS(deformation_margin(Rational(3, 2), 1), InvalidInput);
  CHECK(deformation_margin(0.5, 2).value == doctest::Approx(std::pow(2.0, 0.25) - 1.0));

  const AdeleLattice l(AdeleAutomorphism::diagonal_scalar(PlaceSet({2}), 2, Rational(1, 2)));
  // vol = (1/2)^2 * |1/4|_2 = 1, so no room.
  CHECK(deformation_margin(l).value == 0.0);
  CHECK_THROWS_AS(deformation_margin(AdeleLattice::base(PlaceSet({2}), 1)), InvalidInput);
}

TEST_CASE("Balian-Low classifier") {
  CHECK(balian_low_classifier("R").blt_holds);
  CHECK(balian_low_classifier("R^2 x Z3").real_dimension == 2);
  CHECK(balian_low_classifier("A_Q{S=2,3; n=2}").blt_holds);
  CHECK_FALSE(balian_low_classifier("Q_p{p=5; n=1}").blt_holds);
  CHECK_FALSE(balian_low_classifier("Q_S{S=2; n=3}").blt_holds);
  CHECK_FALSE(balian_low_classifier("A_Fq{q=4; n=1}").blt_holds);
  CHECK_FALSE(balian_low_classifier("Z12 x T x Z").blt_holds);
  CHECK(balian_low_classifier("R").message.find("BLT holds") != std::string::npos);
  CHECK(balian_low_classifier("Z4").message.find("ONB exists") != std::string::npos);
  CHECK_THROWS_AS(parse_group_spec("A_Fq{q=6; n=1}"), InvalidInput);
  CHECK_THROWS_AS(parse_group_spec("Q_p{p=4; n=1}"), InvalidInput);
  CHECK_THROWS_AS(parse_group_spec("banana"), InvalidInput);
  CHECK_THROWS_AS(parse_group_spec(""), InvalidInput);
  CHECK(parse_group_spec("R^3 x A_Q{S=2; n=2}").real_dimension() == 5);
}

TEST_CASE("compact open indicator") {
  const auto ip = compact_open_inner_products(4, 2);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t w = 0; w < 4; ++w) {
      const bool inside = x % 2 == 0 && w % 2 == 0;
      CHECK(std::abs(ip[x * 4 + w] - Complex(inside ? 1.0 : 0.0)) < 1e-15);
    }
  CHECK(compact_open_indicator(6, 3).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(compact_open_indicator(6, 4), InvalidInput);
}

TEST_CASE("finite transference on Z/4 with M = 4, d = 2") {
  const FiniteLcaGroup z4({4});
  const Window d = Window::delta(z4);
  const TransferenceResult r = finite_transference_check(d, d, TfLattice::full_time(z4), 4, 2);
  CHECK(r.base_dual);
  // <u, pi(z2) u> = 1 on all of K x K^perp, so the lifted system is not a dual pair.
  CHECK_FALSE(r.lifted_dual);
  CHECK_FALSE(r.equivalent());
  CHECK(r.factorization_residual < 1e-12);

  const TransferenceResult zero = finite_transference_check(d, Window::zeros(z4), TfLattice::full_time(z4), 4, 2);
  CHECK_FALSE(zero.base_dual);
  CHECK_FALSE(zero.lifted_dual);
  CHECK_THROWS_AS(finite_transference_check(d, d, TfLattice::full_time(z4), 4, 3), InvalidInput);

  // M = 1 makes the second factor trivial.
  const TransferenceResult t = finite_transference_check(d, d, TfLattice::full_time(z4), 1, 1);
  CHECK(t.equivalent());
  CHECK(t.lifted_dual);
}
