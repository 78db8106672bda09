#include "inls/spectral.hpp"

#include <cmath>

namespace inls {

namespace {

void require_finite(const Field3& f, const char* op) {
  if (!f.is_finite())
    throw RuntimeError(std::string(op) + ": non-finite input field");
}

}  // namespace

Field3 laplacian_spectral(const Field3& f) {
  require_finite(f, "laplacian_spectral");
  const Grid3& g = f.grid;
  const Fft3& fft = fft_for(g.n);

  Field3 out(g);
  std::vector<complexd> hat;
  fft.forward(f.values, hat);
  for (int iz = 0; iz < g.n; ++iz) {
    const double kz = g.wavenumber(iz);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.wavenumber(iy);
      for (int ix = 0; ix < g.n; ++ix) {
        const double kx = g.wavenumber(ix);
        hat[g.index(ix, iy, iz)] *= -(kx * kx + ky * ky + kz * kz);
      }
    }
  }
  fft.inverse(hat, out.values);
  return out;
}

std::array<Field3, 3> gradient_spectral(const Field3& f) {
  require_finite(f, "gradient_spectral");
  const Grid3& g = f.grid;
  const Fft3& fft = fft_for(g.n);

  std::vector<complexd> hat;
  fft.forward(f.values, hat);

  std::array<Field3, 3> out = {Field3(g), Field3(g), Field3(g)};
  std::vector<complexd> comp(hat.size());
  for (int axis = 0; axis < 3; ++axis) {
    for (int iz = 0; iz < g.n; ++iz) {
      for (int iy = 0; iy < g.n; ++iy) {
        for (int ix = 0; ix < g.n; ++ix) {
          const int j = axis == 0 ? ix : (axis == 1 ? iy : iz);
          // Zero the unmatched m = -n/2 mode so d/dx of a real field
          // stays real.
          const double k = (j == g.n / 2) ? 0.0 : g.wavenumber(j);
          comp[g.index(ix, iy, iz)] = complexd(0.0, k) * hat[g.index(ix, iy, iz)];
        }
      }
    }
    fft.inverse(comp, out[axis].values);
  }
  return out;
}

complexd integrate(const Field3& f) {
  complexd acc(0.0, 0.0);
  for (const auto& v : f.values) acc += v;
  return acc * f.grid.cell_volume();
}

complexd integrate(const Field3& f, const std::function<double(const Vec3&)>& w) {
  const Grid3& g = f.grid;
  complexd acc(0.0, 0.0);
  for (int iz = 0; iz < g.n; ++iz)
    for (int iy = 0; iy < g.n; ++iy)
      for (int ix = 0; ix < g.n; ++ix)
        acc += w(g.node(ix, iy, iz)) * f.values[g.index(ix, iy, iz)];
  return acc * g.cell_volume();
}

double l2_norm_sq(const Field3& f) {
  double acc = 0.0;
  for (const auto& v : f.values) acc += std::norm(v);
  return acc * f.grid.cell_volume();
}

double grad_norm_sq(const Field3& f) {
  const Grid3& g = f.grid;
  const Fft3& fft = fft_for(g.n);
  std::vector<complexd> hat;
  fft.forward(f.values, hat);
  double acc = 0.0;
  for (int iz = 0; iz < g.n; ++iz) {
    const double kz = g.wavenumber(iz);
    for (int iy = 0; iy < g.n; ++iy) {
      const double ky = g.wavenumber(iy);
      for (int ix = 0; ix < g.n; ++ix) {
        const double kx = g.wavenumber(ix);
        acc += (kx * kx + ky * ky + kz * kz) *
               std::norm(hat[g.index(ix, iy, iz)]);
      }
    }
  }
  // Parseval: sum_j |f_j|^2 = (1/n^3) sum_m |F_m|^2, then times cell volume.
  return acc * f.grid.cell_volume() / f.size();
}

double h1_norm_sq(const Field3& f) { return l2_norm_sq(f) + grad_norm_sq(f); }

double sup_norm(const Field3& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double l2_distance(const Field3& a, const Field3& b) {
  if (!(a.grid == b.grid))
    throw RuntimeError("l2_distance: grids do not match");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    acc += std::norm(a.values[i] - b.values[i]);
  return std::sqrt(acc * a.grid.cell_volume());
}

}  // namespace inls
