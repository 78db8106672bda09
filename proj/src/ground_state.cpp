#include "inls/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace inls {

double critical_index(double b, double p) {
  if (!(p > 1.0)) throw WindowError("critical_index: requires p > 1");
  return 1.5 - (2.0 - b) / (p - 1.0);
}

bool in_intercritical_window(double b, double p) {
  if (!(b >= 0.0 && b < 1.0)) return false;
  return p > 1.0 + (4.0 - 2.0 * b) / 3.0 && p < 5.0 - 2.0 * b;
}

namespace {

// |q|^{p-1} q, sign-safe for the overshoot branch where Q dips below zero.
double signed_pow(double q, double p) {
  return std::copysign(std::pow(std::abs(q), p), q);
}

struct OdeState {
  double r;
  double q;   // Q
  double dq;  // Q'
};

// Q'' = Q - r^{-b} |Q|^{p-1} Q - (2/r) Q'
inline void rhs(double b, double p, double r, const double y[2], double f[2]) {
  f[0] = y[1];
  f[1] = y[0] - std::pow(r, -b) * signed_pow(y[0], p) - 2.0 / r * y[1];
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187,
                 A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600,
                 E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640,
                 E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

// One adaptive DP45 step from y at r with suggested size h. Returns the
// accepted step size (updates y, r, h for the next attempt).
bool dp45_step(double b, double p, double& r, double y[2], double& h,
               double rtol, double atol) {
  double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], yt[2];
  rhs(b, p, r, y, k1);
  yt[0] = y[0] + h * A21 * k1[0];
  yt[1] = y[1] + h * A21 * k1[1];
  rhs(b, p, r + h / 5, yt, k2);
  yt[0] = y[0] + h * (A31 * k1[0] + A32 * k2[0]);
  yt[1] = y[1] + h * (A31 * k1[1] + A32 * k2[1]);
  rhs(b, p, r + 3 * h / 10, yt, k3);
  yt[0] = y[0] + h * (A41 * k1[0] + A42 * k2[0] + A43 * k3[0]);
  yt[1] = y[1] + h * (A41 * k1[1] + A42 * k2[1] + A43 * k3[1]);
  rhs(b, p, r + 4 * h / 5, yt, k4);
  yt[0] = y[0] + h * (A51 * k1[0] + A52 * k2[0] + A53 * k3[0] + A54 * k4[0]);
  yt[1] = y[1] + h * (A51 * k1[1] + A52 * k2[1] + A53 * k3[1] + A54 * k4[1]);
  rhs(b, p, r + 8 * h / 9, yt, k5);
  yt[0] = y[0] + h * (A61 * k1[0] + A62 * k2[0] + A63 * k3[0] + A64 * k4[0] +
                      A65 * k5[0]);
  yt[1] = y[1] + h * (A61 * k1[1] + A62 * k2[1] + A63 * k3[1] + A64 * k4[1] +
                      A65 * k5[1]);
  rhs(b, p, r + h, yt, k6);
  double y5[2];
  y5[0] = y[0] + h * (B1 * k1[0] + B3 * k3[0] + B4 * k4[0] + B5 * k5[0] +
                      B6 * k6[0]);
  y5[1] = y[1] + h * (B1 * k1[1] + B3 * k3[1] + B4 * k4[1] + B5 * k5[1] +
                      B6 * k6[1]);
  rhs(b, p, r + h, y5, k7);

  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                          E6 * k6[i] + E7 * k7[i]);
    const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
    err = std::max(err, std::abs(e) / sc);
  }
  const bool accept = err <= 1.0;
  if (accept) {
    r += h;
    y[0] = y5[0];
    y[1] = y5[1];
  }
  const double fac =
      std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
  h *= fac;
  return accept;
}

enum class Shot { Crossed, Diverged, Reached };

OdeState series_state(double b, double p, double beta, double r) {
  const double c1 = std::pow(beta, p) / ((2.0 - b) * (3.0 - b));
  const double q = beta - c1 * std::pow(r, 2.0 - b) + beta * r * r / 6.0;
  const double dq =
      -c1 * (2.0 - b) * std::pow(r, 1.0 - b) + beta * r / 3.0;
  return {r, q, dq};
}

// Integrate one shot from the series start; classify the trajectory and
// optionally record it through `sink(r, Q, Q')` at every accepted step.
Shot shoot(double b, double p, double beta, double r0, double r_max,
           double rtol,
           const std::function<void(double, double, double)>* sink,
           OdeState* last) {
  OdeState s = series_state(b, p, beta, r0);
  double y[2] = {s.q, s.dq};
  double r = r0;
  double h = r0;
  const double atol = rtol * 1e-2 * beta;
  int steps = 0;
  const int max_steps = 2'000'000;
  if (sink) (*sink)(r, y[0], y[1]);
  while (r < r_max) {
    h = std::min(h, r_max - r);
    if (h < 1e-15 * std::max(r, 1.0))
      throw ResolutionError(
          "solve_ground_state: step size underflow near r = " +
          std::to_string(r) + "; refine the series start r0");
    if (++steps > max_steps)
      throw RuntimeError("solve_ground_state: step budget exhausted");
    if (!dp45_step(b, p, r, y, h, rtol, atol)) continue;
    if (last) *last = {r, y[0], y[1]};
    if (sink) (*sink)(r, y[0], y[1]);
    if (y[0] <= 0.0) return Shot::Crossed;
    if (y[1] >= 0.0) return Shot::Diverged;
    // Far-field test against the e^{-r}/r asymptotics: a decaying solution
    // keeps Q'/Q = -1 - 1/r < -1, so Q' + Q > 0 flags divergence early.
    if (r > 2.0 && y[1] + y[0] > 0.0) return Shot::Diverged;
    if (y[0] > 2.0 * beta) return Shot::Diverged;
  }
  return Shot::Reached;
}

}  // namespace

GroundState solve_ground_state(double b, double p, double tol,
                               const GroundStateOptions& opt) {
  if (!(b >= 0.0 && b < 1.0))
    throw WindowError("solve_ground_state: b must be in [0, 1)");
  if (!in_intercritical_window(b, p) && b != 0.0)
    throw WindowError("solve_ground_state: (b, p) outside the intercritical window");
  if (b == 0.0 && !(p > 7.0 / 3.0 && p < 5.0))
    throw WindowError("solve_ground_state: p outside (7/3, 5) for b = 0");
  if (!(tol > 1e-12 && tol < 1e-4))
    throw ConfigError("solve_ground_state: tol must be in (1e-12, 1e-4)");

  const double r0 = opt.series_start_factor * opt.r_max;
  const double rtol = tol;

  // Bracket scan: geometric sweep for adjacent (Diverged, Crossed) amplitudes.
  double lo = 0.0, hi = 0.0;
  {
    double prev_beta = 0.0;
    Shot prev = Shot::Reached;
    for (double beta = 0.25; beta <= 512.0; beta *= 1.5) {
      const Shot out = shoot(b, p, beta, r0, opt.r_max, rtol, nullptr, nullptr);
      if (out == Shot::Crossed && prev == Shot::Diverged) {
        lo = prev_beta;
        hi = beta;
        break;
      }
      prev = out;
      prev_beta = beta;
    }
    if (hi == 0.0)
      throw BracketError(
          "solve_ground_state: no diverge/cross bracket found in the "
          "amplitude sweep");
  }

  // Bisection; Reached means the trajectory hugged the separatrix across the
  // whole window, which is as converged as the window allows.
  double beta = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    beta = 0.5 * (lo + hi);
    const Shot out = shoot(b, p, beta, r0, opt.r_max, rtol, nullptr, nullptr);
    if (out == Shot::Reached) break;
    if (out == Shot::Crossed)
      hi = beta;
    else
      lo = beta;
  }

  // Final pass: record the trajectory, then resample onto the midpoint grid.
  std::vector<double> rr, qq, dd;
  rr.reserve(1 << 16);
  auto sink = std::function<void(double, double, double)>(
      [&](double r, double q, double dq) {
        rr.push_back(r);
        qq.push_back(q);
        dd.push_back(dq);
      });
  OdeState last{r0, beta, 0.0};
  shoot(b, p, beta, r0, opt.r_max, rtol, &sink, &last);

  // Graft point: the last state still descending and positive.
  double r_graft = last.r, q_graft = last.q;
  for (std::size_t i = rr.size(); i-- > 0;) {
    if (qq[i] > 0.0 && dd[i] < 0.0) {
      r_graft = rr[i];
      q_graft = qq[i];
      break;
    }
  }
  const double tail_c = q_graft * r_graft * std::exp(r_graft);

  GroundState gs;
  gs.b = b;
  gs.p = p;
  gs.amplitude = beta;
  gs.tail_start = r_graft;
  gs.profile = RadialField(RadialGrid(opt.r_max, opt.samples));
  gs.profile_deriv = RadialField(gs.profile.grid);

  std::size_t seg = 0;
  for (int j = 0; j < opt.samples; ++j) {
    const double r = gs.profile.grid.node(j);
    double q, dq;
    if (r < rr.front()) {
      const OdeState s = series_state(b, p, beta, r);
      q = s.q;
      dq = s.dq;
    } else if (r >= r_graft) {
      q = tail_c * std::exp(-r) / r;
      dq = -q * (1.0 + 1.0 / r);
    } else {
      while (seg + 1 < rr.size() && rr[seg + 1] < r) ++seg;
      // Cubic Hermite interpolation on the accepted-step segment.
      const double h = rr[seg + 1] - rr[seg];
      const double t = (r - rr[seg]) / h;
      const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
      const double h10 = t * (1 - t) * (1 - t);
      const double h01 = t * t * (3 - 2 * t);
      const double h11 = t * t * (t - 1);
      q = h00 * qq[seg] + h10 * h * dd[seg] + h01 * qq[seg + 1] +
          h11 * h * dd[seg + 1];
      const double g00 = 6 * t * (t - 1) / h;
      const double g10 = (1 - t) * (1 - 3 * t);
      const double g01 = -6 * t * (t - 1) / h;
      const double g11 = t * (3 * t - 2);
      dq = g00 * qq[seg] + g10 * dd[seg] + g01 * qq[seg + 1] +
           g11 * dd[seg + 1];
    }
    gs.profile.samples[j] = q;
    gs.profile_deriv.samples[j] = dq;
  }

  gs.mass = radial_integral(gs.profile, [](double, double q) { return q * q; });
  gs.grad_norm_sq = radial_integral(
      gs.profile_deriv, [](double, double dq) { return dq * dq; });
  gs.nl_integral = radial_integral(gs.profile, [b, p](double r, double q) {
    return std::pow(r, -b) * std::pow(std::abs(q), p + 1.0);
  });
  return gs;
}

double radial_integral(const RadialField& f,
                       const std::function<double(double, double)>& integrand) {
  const double dr = f.grid.spacing();
  double acc = 0.0;
  for (int j = 0; j < f.grid.m; ++j) {
    const double r = f.grid.node(j);
    acc += integrand(r, f.samples[j]) * r * r;
  }
  return 4.0 * M_PI * acc * dr;
}

std::pair<double, double> pohozaev_residuals(const GroundState& gs) {
  const double M =
      radial_integral(gs.profile, [](double, double q) { return q * q; });
  const double G = radial_integral(gs.profile_deriv,
                                   [](double, double dq) { return dq * dq; });
  const double b = gs.b, p = gs.p;
  const double P = radial_integral(gs.profile, [b, p](double r, double q) {
    return std::pow(r, -b) * std::pow(std::abs(q), p + 1.0);
  });
  const double lhs2 = 0.5 * G + 1.5 * M;
  const double rhs2 = (3.0 - b) / (p + 1.0) * P;
  return {std::abs(G + M - P) / P, std::abs(lhs2 - rhs2) / rhs2};
}

double ground_state_energy0(const GroundState& gs) {
  return 0.5 * gs.grad_norm_sq - gs.nl_integral / (gs.p + 1.0);
}

ThresholdConstants threshold_constants(const GroundState& gs) {
  ThresholdConstants tc;
  tc.s_c = critical_index(gs.b, gs.p);
  const double exp_ratio = (1.0 - tc.s_c) / tc.s_c;
  tc.K_grad = std::sqrt(gs.grad_norm_sq) * std::pow(gs.mass, 0.5 * exp_ratio);
  tc.K_mass_energy = std::pow(ground_state_energy0(gs), tc.s_c) *
                     std::pow(gs.mass, 1.0 - tc.s_c);
  return tc;
}

Field3 embed_radial(const GroundState& gs, const Grid3& grid, double amplitude) {
  const double q_end = gs.profile.samples.back();
  const double r_end = gs.profile.grid.node(gs.profile.grid.m - 1);
  return make_field(grid, [&](const Vec3& x) {
    const double r = norm(x);
    double q;
    if (r <= r_end)
      q = gs.profile.interp(r);
    else  // corners beyond the radial window: continue the e^{-r}/r tail
      q = q_end * (r_end / r) * std::exp(-(r - r_end));
    return complexd(amplitude * q, 0.0);
  });
}

}  // namespace inls
