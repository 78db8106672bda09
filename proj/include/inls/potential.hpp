#pragma once

#include <map>
#include <optional>
#include <string>

#include "inls/grid.hpp"

namespace inls {

/// Analytic potential families. All shipped families are smooth and bounded,
/// so V and its gradient are grid-evaluable everywhere (no singular set).
struct PotentialSpec {
  enum class Family { Zero, Gaussian, Yukawa, BoundedInversePower };

  Family family = Family::Zero;
  double amplitude = 0.0;   // A; sign encodes attractive (<0) / repulsive (>0)
  Vec3 center = {0, 0, 0};  // gaussian only
  double width = 1.0;       // gaussian sigma
  double screening = 1.0;   // yukawa m
  double exponent = 0.5;    // bounded inverse power a in (0,1)
  double core_radius = 1.0; // yukawa / bounded inverse power rho

  static PotentialSpec zero() { return {}; }
  static PotentialSpec gaussian(double A, double sigma = 1.0,
                                Vec3 x0 = {0, 0, 0});
  static PotentialSpec yukawa(double A, double m, double rho = 1.0);
  static PotentialSpec bounded_inverse_power(double A, double a, double rho);

  bool is_zero() const { return family == Family::Zero || amplitude == 0.0; }

  // Characteristic length the grid must resolve (gaussian width, yukawa
  // screening length, core radius).
  double feature_width() const;

  std::string to_text() const;                      // key=value;... serialization
  static PotentialSpec from_text(const std::string& text);
};

/// V(x).
double evaluate(const PotentialSpec& V, const Vec3& x);

/// x . grad V(x), analytic per family.
double evaluate_xgrad(const PotentialSpec& V, const Vec3& x);

/// grad V(x), analytic per family.
Vec3 evaluate_grad(const PotentialSpec& V, const Vec3& x);

/// Quadrature configuration for the Kato-norm convolution.
struct KatoQuadrature {
  int n = 64;
  double box_length = 32.0;
};

/// sup_x int |V(y)| / |x - y| dy, approximated by a spectral convolution with
/// the Newton kernel truncated at radius L/2 (exact Fourier symbol
/// 4 pi (1 - cos(|k| L/2)) / |k|^2) and maximized over all grid nodes plus
/// the origin. Truncation keeps periodic images out of the result, so no
/// mean-mode correction is needed.
double kato_norm(const PotentialSpec& V, const KatoQuadrature& quad = {});

/// Same convolution for the negative part V_ = min(V, 0).
double kato_norm_negative_part(const PotentialSpec& V,
                               const KatoQuadrature& quad = {});

struct AdmissibilityReport {
  double kato_norm = 0.0;
  double kato_norm_negative_part = 0.0;
  double l32_norm = 0.0;  // || V ||_{L^{3/2}} over the quadrature box
  bool nonneg = false;
  bool repulsive = false;          // x . grad V <= 0 everywhere sampled
  bool sign_conclusive = true;     // sampled extrema clear of the tolerance band
  std::map<std::string, double> xgradV_lr_norms;  // keys "1.5", "2", "3", "inf"

  bool assumption_decay_ok = false;      // (1.3): V in K_0 cap L^{3/2}
  bool assumption_spectral_ok = false;   // (1.4): ||V_-||_K0 < 4 pi
  bool theorem_hypotheses_ok = false;    // V >= 0, x.grad V <= 0, x.grad V in L^r
};

/// Evaluates the admissibility assumptions on V. Sampling that cannot decide
/// a sign within tolerance is reported as inconclusive, never passed.
AdmissibilityReport check_assumptions(const PotentialSpec& V,
                                      const KatoQuadrature& quad = {},
                                      unsigned seed = 0);

}  // namespace inls
