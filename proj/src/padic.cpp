#include "lcagabor/padic.hpp"

#include "lcagabor/errors.hpp"

#include <algorithm>

namespace lcagabor {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw InvalidInput(std::to_string(p) + " is not a prime in [2, 2^20]");
}

const Prime& Place::prime() const {
  if (!prime_) throw InvalidInput("the infinite place has no prime");
  return *prime_;
}

std::string Place::to_string() const { return prime_ ? std::to_string(prime_->value()) : std::string("inf"); }

Valuation valuation(const Integer& n, const Prime& p) {
  if (n == 0) return std::nullopt;
  Integer m = boost::multiprecision::abs(n);
  const Integer pp(p.value());
  std::int64_t k = 0;
  while (m % pp == 0) {
    m /= pp;
    ++k;
  }
  return k;
}

Valuation valuation(const Rational& q, const Prime& p) {
  if (q == 0) return std::nullopt;
  return *valuation(boost::multiprecision::numerator(q), p) - *valuation(boost::multiprecision::denominator(q), p);
}

Rational padic_abs(const Rational& q, const Prime& p) {
  const Valuation v = valuation(q, p);
  if (!v) return Rational(0);
  return power(Rational(p.value()), -*v);
}

namespace {

void add_prime_factors(Integer n, std::vector<std::int64_t>& out) {
  n = boost::multiprecision::abs(n);
  for (std::int64_t d = 2; Integer(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    if (n > Integer(kMaxPrime)) throw InvalidInput("prime factor larger than 2^20");
    out.push_back(n.convert_to<std::int64_t>());
  }
}

}  // namespace

std::vector<std::int64_t> prime_support(const Rational& q) {
  if (q == 0) throw InvalidInput("zero has no prime support");
  std::vector<std::int64_t> primes;
  add_prime_factors(boost::multiprecision::numerator(q), primes);
  add_prime_factors(boost::multiprecision::denominator(q), primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool PadicScalar::is_integral() const {
  const Valuation v = valuation();
  return !v || *v >= 0;
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw ShapeMismatch("ragged matrix rows");
    for (auto& v : row) data_.push_back(std::move(v));
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw ShapeMismatch("determinant of a non-square matrix");
  RationalMatrix m = *this;
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Rational d = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw ShapeMismatch("vector length does not match matrix");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::vector<Rational> RationalMatrix::solve(const std::vector<Rational>& b) const { return inverse().apply(b); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += lcagabor::to_string((*this)(r, c));
    }
    out += ']';
  }
  return out + "]";
}

bool in_gl_n_zp(const RationalMatrix& a, const Prime& p) {
  const Rational det = a.determinant();
  if (det == 0) throw SingularMatrix("singular matrix is in no GL_n");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Valuation v = valuation(a(r, c), p);
      if (v && *v < 0) return false;
    }
  return *valuation(det, p) == 0;
}

Rational local_modular(const RationalMatrix& a, const Place& place) {
  const Rational det = a.determinant();
  if (det == 0) throw SingularMatrix("modular function of a singular matrix");
  if (place.is_infinite()) return boost::multiprecision::abs(det);
  return padic_abs(det, place.prime());
}

}  // namespace lcagabor
