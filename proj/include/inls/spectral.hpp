#pragma once

#include <functional>

#include "inls/fft.hpp"
#include "inls/grid.hpp"

namespace inls {

/// Fourier-multiplier Laplacian: -|k|^2 in frequency space, k = 2 pi m / L
/// with m in [-n/2, n/2). Throws RuntimeError on non-finite input.
Field3 laplacian_spectral(const Field3& f);

/// Gradient components via multipliers i k_j. The m = -n/2 mode is zeroed in
/// each component so real fields map to real-valued derivative data.
std::array<Field3, 3> gradient_spectral(const Field3& f);

/// Midpoint quadrature sum f(x_j) * (L/n)^3 over the offset grid.
complexd integrate(const Field3& f);

/// Weighted midpoint quadrature sum w(x_j) f(x_j) * (L/n)^3.
complexd integrate(const Field3& f, const std::function<double(const Vec3&)>& w);

/// || f ||_{L^2}^2 by physical-space quadrature.
double l2_norm_sq(const Field3& f);

/// || grad f ||_{L^2}^2 by the Parseval sum of |k|^2 |f_hat|^2 (all modes,
/// Nyquist included).
double grad_norm_sq(const Field3& f);

/// || f ||_{H^1}^2 = || f ||^2 + || grad f ||^2.
double h1_norm_sq(const Field3& f);

double sup_norm(const Field3& f);

/// L^2 norm of (a - b); grids must match.
double l2_distance(const Field3& a, const Field3& b);

}  // namespace inls
