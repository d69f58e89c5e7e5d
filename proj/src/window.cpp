#include "lcagabor/window.hpp"

#include "lcagabor/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lcagabor {

Window::Window(FiniteLcaGroup group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.cardinality())
    throw ShapeMismatch("window has " + std::to_string(values_.size()) + " values, group " + group_.to_string() +
                        " has " + std::to_string(group_.cardinality()) + " elements");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InvalidInput("window entries must be finite");
  }
}

Window Window::zeros(const FiniteLcaGroup& group) {
  return Window(group, std::vector<Complex>(group.cardinality()));
}

Window Window::delta(const FiniteLcaGroup& group, std::size_t at) {
  std::vector<Complex> v(group.cardinality());
  if (at >= v.size()) throw ShapeMismatch("delta position outside the group");
  v[at] = 1.0;
  return Window(group, std::move(v));
}

Window Window::constant(const FiniteLcaGroup& group) {
  const double c = 1.0 / std::sqrt(static_cast<double>(group.cardinality()));
  return Window(group, std::vector<Complex>(group.cardinality(), Complex(c, 0.0)));
}

Window Window::random(const FiniteLcaGroup& group, Rng& rng) {
  std::vector<Complex> v(group.cardinality());
  for (auto& z : v) {
    const double re = uniform_symmetric(rng);
    const double im = uniform_symmetric(rng);
    z = {re, im};
  }
  return Window(group, std::move(v));
}

double Window::norm() const {
  // Scaled accumulation keeps the relative error near machine precision.
  double scale = 0.0;
  for (const auto& v : values_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& v : values_) sum += std::norm(v / scale);
  return scale * std::sqrt(sum);
}

Window Window::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidInput("cannot normalize the zero window");
  return Complex(1.0 / n) * *this;
}

Window Window::perturbed(std::size_t index, Complex delta) const {
  if (index >= values_.size()) throw ShapeMismatch("perturbation index outside the group");
  Window out = *this;
  out.values_[index] += delta;
  return out;
}

void require_same_group(const FiniteLcaGroup& a, const FiniteLcaGroup& b) {
  if (!(a == b)) throw ShapeMismatch("operands live on " + a.to_string() + " and " + b.to_string());
}

Window operator+(const Window& a, const Window& b) {
  require_same_group(a.group_, b.group_);
  Window out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] += b.values_[i];
  return out;
}

Window operator-(const Window& a, const Window& b) {
  require_same_group(a.group_, b.group_);
  Window out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] -= b.values_[i];
  return out;
}

Window operator*(Complex c, const Window& a) {
  Window out = a;
  for (auto& v : out.values_) v *= c;
  return out;
}

Complex inner(const Window& f, const Window& g) {
  require_same_group(f.group(), g.group());
  Complex s = 0.0;
  for (std::size_t t = 0; t < f.size(); ++t) s += f[t] * std::conj(g[t]);
  return s;
}

Window fourier_transform(const Window& f) {
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(n);
  for (std::size_t w = 0; w < n; ++w) {
    Complex s = 0.0;
    for (std::size_t t = 0; t < n; ++t) s += f[t] * std::conj(group.pairing(w, t));
    out[w] = s;
  }
  return Window(group, std::move(out));
}

Window inverse_fourier_transform(const Window& fhat) {
  const auto& group = fhat.group();
  const std::size_t n = group.cardinality();
  const double weight = 1.0 / static_cast<double>(n);
  std::vector<Complex> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    Complex s = 0.0;
    for (std::size_t w = 0; w < n; ++w) s += fhat[w] * group.pairing(w, t);
    out[t] = weight * s;
  }
  return Window(group, std::move(out));
}

Window unitary_fourier_transform(const Window& f) {
  return Complex(1.0 / std::sqrt(static_cast<double>(f.size()))) * fourier_transform(f);
}

Window unitary_inverse_fourier_transform(const Window& fhat) {
  return Complex(std::sqrt(static_cast<double>(fhat.size()))) * inverse_fourier_transform(fhat);
}

Window tensor(const Window& g1, const Window& g2) {
  auto group = FiniteLcaGroup::product(g1.group(), g2.group());
  std::vector<Complex> v;
  v.reserve(g1.size() * g2.size());
  for (std::size_t a = 0; a < g1.size(); ++a)
    for (std::size_t b = 0; b < g2.size(); ++b) v.push_back(g1[a] * g2[b]);
  return Window(std::move(group), std::move(v));
}

}  // namespace lcagabor
