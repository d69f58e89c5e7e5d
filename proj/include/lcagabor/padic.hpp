#pragma once

// Exact p-adic arithmetic on rationals. Q sits densely in Q_p, and every
// lattice or automorphism computation downstream has rational entries, so
// no precision policy is needed.

#include "lcagabor/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcagabor {

/// Largest prime accepted; primality is certified by trial division.
inline constexpr std::int64_t kMaxPrime = std::int64_t{1} << 20;

bool is_prime(std::int64_t n);

/// A certified prime p with 2 <= p <= kMaxPrime.
class Prime {
 public:
  /// Throws InvalidInput if p is not a prime in range.
  explicit Prime(std::int64_t p);
  std::int64_t value() const { return p_; }
  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

/// Either the archimedean place or a finite place p.
class Place {
 public:
  static Place infinite() { return Place(std::nullopt); }
  static Place finite(Prime p) { return Place(p); }

  bool is_infinite() const { return !prime_; }
  const Prime& prime() const;
  std::string to_string() const;

 private:
  explicit Place(std::optional<Prime> p) : prime_(p) {}
  std::optional<Prime> prime_;
};

/// v_p(q); nullopt encodes +infinity (q = 0).
using Valuation = std::optional<std::int64_t>;

Valuation valuation(const Rational& q, const Prime& p);
Valuation valuation(const Integer& n, const Prime& p);

/// |q|_p = p^{-v_p(q)}, |0|_p = 0.
Rational padic_abs(const Rational& q, const Prime& p);

/// Primes dividing the numerator or denominator of q (q != 0), ascending.
std::vector<std::int64_t> prime_support(const Rational& q);

/// Rational tagged with its completion Q_p.
struct PadicScalar {
  Rational value;
  Prime prime;

  Valuation valuation() const { return lcagabor::valuation(value, prime); }
  Rational abs() const { return padic_abs(value, prime); }
  bool is_integral() const;
};

/// Square or rectangular matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Rational determinant() const;
  /// Throws SingularMatrix.
  RationalMatrix inverse() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  /// Exact solve A x = b for invertible square A. Throws SingularMatrix.
  std::vector<Rational> solve(const std::vector<Rational>& b) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Entries p-integral and det A a p-adic unit. Throws SingularMatrix for det A = 0.
bool in_gl_n_zp(const RationalMatrix& a, const Prime& p);

/// Modular function of x -> A x on Q_v^n: |det A|_v. At the infinite place the
/// value is the ordinary absolute value of det A, still exact because A is rational.
Rational local_modular(const RationalMatrix& a, const Place& place);

}  // namespace lcagabor
