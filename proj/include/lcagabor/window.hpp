#pragma once

#include "lcagabor/finite_lca.hpp"
#include "lcagabor/random.hpp"

#include <span>
#include <vector>

namespace lcagabor {

/// Complex-valued function on a finite group, one value per element index.
class Window {
 public:
  Window(FiniteLcaGroup group, std::vector<Complex> values);

  static Window zeros(const FiniteLcaGroup& group);
  static Window delta(const FiniteLcaGroup& group, std::size_t at = 0);
  /// Constant with unit l2 norm.
  static Window constant(const FiniteLcaGroup& group);
  /// Entries uniform in [-1,1] + i[-1,1].
  static Window random(const FiniteLcaGroup& group, Rng& rng);

  const FiniteLcaGroup& group() const { return group_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }

  double norm() const;
  Window normalized() const;
  /// Copy with `delta` added at one index.
  Window perturbed(std::size_t index, Complex delta) const;

  friend Window operator+(const Window& a, const Window& b);
  friend Window operator-(const Window& a, const Window& b);
  friend Window operator*(Complex c, const Window& a);

 private:
  FiniteLcaGroup group_;
  std::vector<Complex> values_;
};

/// <f, g> = sum_t f(t) conj(g(t)) (counting measure).
Complex inner(const Window& f, const Window& g);

void require_same_group(const FiniteLcaGroup& a, const FiniteLcaGroup& b);

/// f^(w) = sum_t f(t) conj(w(t)). Result lives on G^ (same shape).
Window fourier_transform(const Window& f);
/// Inverse of fourier_transform under the 1/|G| dual weight.
Window inverse_fourier_transform(const Window& fhat);
/// |G|^{-1/2}-scaled versions, unitary for counting measure on both sides.
Window unitary_fourier_transform(const Window& f);
Window unitary_inverse_fourier_transform(const Window& fhat);

/// (g1 (x) g2)(t1, t2) = g1(t1) g2(t2) on G1 x G2.
Window tensor(const Window& g1, const Window& g2);

}  // namespace lcagabor
