#include "lcagabor/kernels.hpp"

#include "lcagabor/errors.hpp"

#ifdef LCAGABOR_HAVE_OPENMP
#include <omp.h>
#define LCAGABOR_PARALLEL_FOR _Pragma("omp parallel for schedule(static)")
#else
#define LCAGABOR_PARALLEL_FOR
#endif

namespace lcagabor::kernels {

namespace {

// Shifted copies laid out point-minor: out[t * K + k] = (pi(z_k) w)(t).
std::vector<Complex> shifted_columns(const Window& w, std::span<const TfPoint> points) {
  const auto& group = w.group();
  const std::size_t n = group.cardinality();
  const std::size_t k_count = points.size();
  std::vector<Complex> out(n * k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const TfPoint z = points[k];
    for (std::size_t t = 0; t < n; ++t) out[t * k_count + k] = group.pairing(z.omega, t) * w[group.sub(t, z.x)];
  }
  return out;
}

Complex row_dot(const Complex* u, const Complex* v, std::size_t len) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < len; ++k) s += u[k] * std::conj(v[k]);
  return s;
}

}  // namespace

int thread_count() {
#ifdef LCAGABOR_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// ---------------------------------------------------------------------------
// Parallel kernels

std::vector<Complex> tf_shift(const Window& f, TfPoint z) {
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(n);
  LCAGABOR_PARALLEL_FOR
  for (std::size_t t = 0; t < n; ++t) out[t] = group.pairing(z.omega, t) * f[group.sub(t, z.x)];
  return out;
}

ComplexMatrix frame_operator(const Window& g, const Window& h, std::span<const TfPoint> points) {
  require_same_group(g.group(), h.group());
  const std::size_t n = g.size();
  const std::size_t k = points.size();
  const auto u = shifted_columns(h, points);
  const auto v = shifted_columns(g, points);
  ComplexMatrix s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  LCAGABOR_PARALLEL_FOR
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t r = 0; r < n; ++r)
      s(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(r)) = row_dot(&u[t * k], &v[r * k], k);
  }
  return s;
}

ComplexMatrix tf_combination(const FiniteLcaGroup& group, std::span<const TfPoint> points,
                             std::span<const Complex> coeffs, double scale) {
  if (coeffs.size() != points.size()) throw ShapeMismatch("one coefficient per plane point expected");
  const std::size_t n = group.cardinality();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  LCAGABOR_PARALLEL_FOR
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      const TfPoint z = points[k];
      m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(group.sub(t, z.x))) +=
          (coeffs[k] * scale) * group.pairing(z.omega, t);
    }
  }
  return m;
}

std::vector<Complex> tf_inner_products(const Window& f, const Window& g, std::span<const TfPoint> points) {
  require_same_group(f.group(), g.group());
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(points.size());
  LCAGABOR_PARALLEL_FOR
  for (std::size_t k = 0; k < points.size(); ++k) {
    const TfPoint z = points[k];
    Complex s = 0.0;
    for (std::size_t t = 0; t < n; ++t) s += f[t] * std::conj(group.pairing(z.omega, t) * g[group.sub(t, z.x)]);
    out[k] = s;
  }
  return out;
}

std::vector<Complex> stft(const Window& f, const Window& g) {
  require_same_group(f.group(), g.group());
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(n * n);
  LCAGABOR_PARALLEL_FOR
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const std::size_t x = idx / n;
    const std::size_t w = idx % n;
    Complex s = 0.0;
    for (std::size_t t = 0; t < n; ++t) s += f[t] * std::conj(group.pairing(w, t) * g[group.sub(t, x)]);
    out[idx] = s;
  }
  return out;
}

std::vector<Complex> zak(const Window& f, std::span<const std::size_t> lattice) {
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(n * n);
  LCAGABOR_PARALLEL_FOR
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) {
      Complex s = 0.0;
      for (std::size_t l : lattice) s += f[group.add(x, l)] * group.pairing(w, l);
      out[x * n + w] = s;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serial reference: plain loops, same per-entry summation order.

namespace reference {

std::vector<Complex> tf_shift(const Window& f, TfPoint z) {
  const auto& group = f.group();
  std::vector<Complex> out(group.cardinality());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = group.pairing(z.omega, t) * f[group.sub(t, z.x)];
  return out;
}

ComplexMatrix frame_operator(const Window& g, const Window& h, std::span<const TfPoint> points) {
  require_same_group(g.group(), h.group());
  const auto& group = g.group();
  const std::size_t n = g.size();
  ComplexMatrix s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (const TfPoint z : points) {
        const Complex u = group.pairing(z.omega, t) * h[group.sub(t, z.x)];
        const Complex v = group.pairing(z.omega, r) * g[group.sub(r, z.x)];
        acc += u * std::conj(v);
      }
      s(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(r)) = acc;
    }
  }
  return s;
}

ComplexMatrix tf_combination(const FiniteLcaGroup& group, std::span<const TfPoint> points,
                             std::span<const Complex> coeffs, double scale) {
  if (coeffs.size() != points.size()) throw ShapeMismatch("one coefficient per plane point expected");
  const std::size_t n = group.cardinality();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      const TfPoint z = points[k];
      m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(group.sub(t, z.x))) +=
          (coeffs[k] * scale) * group.pairing(z.omega, t);
    }
  }
  return m;
}

std::vector<Complex> tf_inner_products(const Window& f, const Window& g, std::span<const TfPoint> points) {
  require_same_group(f.group(), g.group());
  const auto& group = f.group();
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const TfPoint z : points) {
    Complex s = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) s += f[t] * std::conj(group.pairing(z.omega, t) * g[group.sub(t, z.x)]);
    out.push_back(s);
  }
  return out;
}

std::vector<Complex> stft(const Window& f, const Window& g) {
  require_same_group(f.group(), g.group());
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) {
      Complex s = 0.0;
      for (std::size_t t = 0; t < n; ++t) s += f[t] * std::conj(group.pairing(w, t) * g[group.sub(t, x)]);
      out[x * n + w] = s;
    }
  }
  return out;
}

std::vector<Complex> zak(const Window& f, std::span<const std::size_t> lattice) {
  const auto& group = f.group();
  const std::size_t n = group.cardinality();
  std::vector<Complex> out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < n; ++w) {
      Complex s = 0.0;
      for (std::size_t l : lattice) s += f[group.add(x, l)] * group.pairing(w, l);
      out[x * n + w] = s;
    }
  }
  return out;
}

}  // namespace reference
}  // namespace lcagabor::kernels
