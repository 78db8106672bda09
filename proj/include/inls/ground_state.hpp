#pragma once

#include <functional>
#include <utility>

#include "inls/grid.hpp"

namespace inls {

/// Scaling-critical Sobolev index s_c = 3/2 - (2-b)/(p-1) in d = 3.
double critical_index(double b, double p);

/// True iff (b, p) lies in the intercritical window
/// 1 + (4-2b)/3 < p < 5 - 2b with 0 <= b < 1.
bool in_intercritical_window(double b, double p);

/// Radial profile of the positive decreasing solution to
///   Q'' + (2/r) Q' - Q + r^{-b} Q^p = 0,  Q'(0) = 0,  Q -> 0,
/// solved with V absent, together with its norms.
struct GroundState {
  double b = 0.0;
  double p = 3.0;
  RadialField profile;        // Q(r) on the midpoint radial grid
  RadialField profile_deriv;  // Q'(r), kept for quadrature cross-checks
  double amplitude = 0.0;     // shooting value beta = Q(0+)
  double mass = 0.0;          // ||Q||_2^2
  double grad_norm_sq = 0.0;  // ||grad Q||_2^2
  double nl_integral = 0.0;   // int |x|^{-b} Q^{p+1}
  double tail_start = 0.0;    // radius beyond which the e^{-r}/r tail is grafted
};

struct GroundStateOptions {
  double r_max = 20.0;
  int samples = 16384;
  double series_start_factor = 1e-4;  // r0 = factor * r_max
};

/// Shooting solver: bisection on beta between an upward-diverging and a
/// sign-crossing trajectory, adaptive embedded Runge-Kutta integration
/// started from the near-origin series
///   Q(r) ~ beta - beta^p r^{2-b}/((2-b)(3-b)) + beta r^2/6.
/// tol must lie in (1e-12, 1e-4); it bounds the local integration error.
GroundState solve_ground_state(double b, double p, double tol,
                               const GroundStateOptions& opt = {});

/// Relative residuals of the two Pohozaev identities
///   (i)  ||grad Q||^2 + ||Q||^2 = int |x|^{-b} Q^{p+1}
///   (ii) (1/2)||grad Q||^2 + (3/2)||Q||^2 = ((3-b)/(p+1)) int |x|^{-b} Q^{p+1}
/// recomputed by quadrature from the stored profile (independent of the
/// norm fields the solver filled in).
std::pair<double, double> pohozaev_residuals(const GroundState& gs);

struct ThresholdConstants {
  double s_c = 0.0;
  double K_grad = 0.0;         // ||grad Q|| * ||Q||^{(1-s_c)/s_c}
  double K_mass_energy = 0.0;  // E_0(Q)^{s_c} * M(Q)^{1-s_c}, E_0 the V = 0 energy
};

ThresholdConstants threshold_constants(const GroundState& gs);

/// V = 0 energy of the profile: (1/2)||grad Q||^2 - (1/(p+1)) int |x|^{-b} Q^{p+1}.
double ground_state_energy0(const GroundState& gs);

/// Embeds the radial profile into a Field3 as amplitude * Q(|x|).
Field3 embed_radial(const GroundState& gs, const Grid3& grid,
                    double amplitude = 1.0);

/// Midpoint-rule radial integral 4 pi int f(r_j) r_j^2 dr over the profile grid.
double radial_integral(const RadialField& f,
                       const std::function<double(double, double)>& integrand);

}  // namespace inls
