#include "lcagabor/errors.hpp"
#include "lcagabor/padic.hpp"

#include <doctest.h>

#include <random>

using namespace lcagabor;

TEST_CASE("valuations and absolute values") {
  const Prime two(2), three(3);
  CHECK(valuation(Rational(12), two) == 2);
  CHECK(valuation(Rational(1, 6), three) == -1);
  CHECK(padic_abs(Rational(12), two) == Rational(1, 4));
  CHECK(padic_abs(Rational(1, 6), three) == 3);
  CHECK_FALSE(valuation(Rational(0), two).has_value());
  CHECK(padic_abs(Rational(0), two) == 0);
  CHECK(valuation(Integer(-40), two) == 3);
  CHECK(valuation(Rational(7), three) == 0);
  CHECK(PadicScalar{Rational(3, 4), two}.valuation() == -2);
  CHECK_FALSE(PadicScalar{Rational(3, 4), two}.is_integral());
  CHECK(PadicScalar{Rational(3, 4), three}.is_integral());
}

TEST_CASE("prime certification") {
  CHECK(is_prime(2));
  CHECK(is_prime(1048573));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Prime(4), InvalidInput);
  CHECK_THROWS_AS(Prime(-3), InvalidInput);
  CHECK_THROWS_AS(Prime(kMaxPrime + 7), InvalidInput);
  CHECK(Place::infinite().to_string() == "inf");
  CHECK(Place::finite(Prime(5)).to_string() == "5");
  CHECK(prime_support(Rational(-45, 14)) == std::vector<std::int64_t>{2, 3, 5, 7});
  CHECK_THROWS_AS(prime_support(Rational(0)), InvalidInput);
}

TEST_CASE("product formula on seeded rationals") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const auto num = static_cast<long long>(rng() % 100000) + 1;
    const auto den = static_cast<long long>(rng() % 100000) + 1;
    const Rational q = (i % 2 ? -1 : 1) * Rational(num, den);
    Rational product = abs(q);
    for (auto p : prime_support(q)) product *= padic_abs(q, Prime(p));
    CHECK(product == 1);
  }
}

TEST_CASE("|.|_p is multiplicative and ultrametric") {
  const Prime p(3);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Rational a(static_cast<long long>(rng() % 500) + 1, static_cast<long long>(rng() % 500) + 1);
    const Rational b(static_cast<long long>(rng() % 500) + 1, static_cast<long long>(rng() % 500) + 1);
    CHECK(padic_abs(a * b, p) == padic_abs(a, p) * padic_abs(b, p));
    CHECK(padic_abs(a + b, p) <= std::max(padic_abs(a, p), padic_abs(b, p)));
  }
}

TEST_CASE("rational matrices") {
  const RationalMatrix a({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
  CHECK(a.determinant() == -2);
  CHECK(a * a.inverse() == RationalMatrix::identity(2));
  CHECK(a.solve({Rational(5), Rational(6)}) == std::vector<Rational>{Rational(-4), Rational(9, 2)});
  CHECK(a.apply({Rational(1), Rational(1)}) == std::vector<Rational>{Rational(3), Rational(7)});
  const RationalMatrix singular({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  CHECK(singular.determinant() == 0);
  CHECK_THROWS_AS(singular.inverse(), SingularMatrix);
  CHECK_THROWS_AS(RationalMatrix({{Rational(1)}, {Rational(1), Rational(2)}}), ShapeMismatch);
}

TEST_CASE("GL_n(Z_p) membership") {
  CHECK_FALSE(in_gl_n_zp(RationalMatrix::diagonal({Rational(2), Rational(1)}), Prime(2)));
  CHECK(in_gl_n_zp(RationalMatrix::diagonal({Rational(3), Rational(1)}), Prime(2)));
  CHECK_FALSE(in_gl_n_zp(RationalMatrix::diagonal({Rational(1, 3), Rational(3)}), Prime(3)));
  CHECK_THROWS_AS(in_gl_n_zp(RationalMatrix(2, 2), Prime(2)), SingularMatrix);
}

TEST_CASE("local modular function and the product formula for matrices") {
  const RationalMatrix a = RationalMatrix::diagonal({Rational(2), Rational(3)});
  CHECK(local_modular(a, Place::finite(Prime(2))) == Rational(1, 2));
  CHECK(local_modular(a, Place::finite(Prime(3))) == Rational(1, 3));
  CHECK(local_modular(a, Place::infinite()) == 6);
  Rational product = local_modular(a, Place::infinite());
  for (auto p : prime_support(a.determinant())) product *= local_modular(a, Place::finite(Prime(p)));
  CHECK(product == 1);
}
