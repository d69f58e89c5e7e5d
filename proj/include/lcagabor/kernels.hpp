#pragma once

// Data-parallel kernels behind gabor_core and zak. Each kernel has an OpenMP
// version (namespace kernels) and a serial reference (kernels::reference).
// Both evaluate every output entry with the same summation order, so their
// results are bit-identical; the reference exists for tests and benchmarks.

#include "lcagabor/finite_lca.hpp"
#include "lcagabor/window.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace lcagabor {

using ComplexMatrix = Eigen::MatrixXcd;

namespace kernels {

/// Number of threads the parallel kernels will use (1 without OpenMP).
int thread_count();

/// (pi(x,w) f)(t) = w(t) f(t - x).
std::vector<Complex> tf_shift(const Window& f, TfPoint z);

/// S = sum_{z} (pi(z) h)(pi(z) g)^*.
ComplexMatrix frame_operator(const Window& g, const Window& h, std::span<const TfPoint> points);

/// sum_z coeffs[z] * scale * pi(z), pi(z) materialized as a matrix.
ComplexMatrix tf_combination(const FiniteLcaGroup& group, std::span<const TfPoint> points,
                             std::span<const Complex> coeffs, double scale);

/// <f, pi(z) g> for each z.
std::vector<Complex> tf_inner_products(const Window& f, const Window& g, std::span<const TfPoint> points);

/// V_g f over the full plane, plane index = x * |G| + w.
std::vector<Complex> stft(const Window& f, const Window& g);

/// Zf(x, w) = sum_{l in lattice} f(x + l) w(l), plane index = x * |G| + w.
std::vector<Complex> zak(const Window& f, std::span<const std::size_t> lattice);

namespace reference {

std::vector<Complex> tf_shift(const Window& f, TfPoint z);
ComplexMatrix frame_operator(const Window& g, const Window& h, std::span<const TfPoint> points);
ComplexMatrix tf_combination(const FiniteLcaGroup& group, std::span<const TfPoint> points,
                             std::span<const Complex> coeffs, double scale);
std::vector<Complex> tf_inner_products(const Window& f, const Window& g, std::span<const TfPoint> points);
std::vector<Complex> stft(const Window& f, const Window& g);
std::vector<Complex> zak(const Window& f, std::span<const std::size_t> lattice);

}  // namespace reference
}  // namespace kernels
}  // namespace lcagabor
