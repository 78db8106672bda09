#pragma once

#include "inls/grid.hpp"

namespace inls {

/// Radial virial weight. Two shapes share one interface:
///  - pure quadratic  a(x) = |x|^2 (used by the classical virial identity);
///  - cutoff weight   a(x) = c_a R^2 omega(|x|/R) with omega the double
///    integral of a smooth bump phi (1 on [0,1/2], 0 on [1,inf)).
/// The scale convention c_a = 2 makes a(x) = |x|^2 exactly on |x| <= R/2,
/// matching the coefficients of the virial identity on the core ball.
class MorawetzWeight {
 public:
  /// Cutoff weight of radius R > 0.
  static MorawetzWeight cutoff(double R);
  /// a(x) = |x|^2 everywhere.
  static MorawetzWeight quadratic();

  bool is_quadratic() const { return quadratic_; }
  double radius() const { return R_; }

  double a(double r) const;
  double aprime(double r) const;       // a'(r)
  double asecond(double r) const;      // a''(r)
  double delta_a(double r) const;      // a'' + 2 a'/r
  double bilaplacian_a(double r) const;  // Delta^2 a
  Vec3 grad_a(const Vec3& x) const;    // a'(r) x/r

  /// sup_r |a'(r)|; finite for both shapes on a bounded box (pass box radius).
  double grad_sup(double r_box) const;

  // Smooth bump phi and the pieces of omega, exposed for tests.
  static double phi(double s);
  static double phi_prime(double s);
  static double phi_second(double s);
  static double omega_prime(double s);  // int_0^s phi
  static double omega(double s);        // int_0^s omega'

 private:
  bool quadratic_ = false;
  double R_ = 1.0;
  static constexpr double kScale = 2.0;  // c_a
};

}  // namespace inls
