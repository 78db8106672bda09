#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "inls/errors.hpp"

namespace inls {

using complexd = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

/// Uniform periodic cube [-L/2, L/2)^3, n points per axis.
/// Nodes sit at half-cell offsets x_j = (j + 1/2) L/n - L/2, so no node
/// coincides with the origin and |x|^{-b} is finite everywhere on the grid.
struct Grid3 {
  int n = 0;
  double box_length = 0.0;
  bool offset = true;

  Grid3() = default;
  Grid3(int n_, double L_, bool offset_ = true)
      : n(n_), box_length(L_), offset(offset_) {
    if (n < 8 || (n & (n - 1)) != 0)
      throw ConfigError("Grid3: n must be a power of two >= 8");
    if (!(box_length > 0.0)) throw ConfigError("Grid3: box_length must be > 0");
  }

  double spacing() const { return box_length / n; }
  double cell_volume() const {
    const double h = spacing();
    return h * h * h;
  }
  std::size_t size() const {
    return static_cast<std::size_t>(n) * n * n;
  }

  // Coordinate of node index j along one axis.
  double coord(int j) const {
    const double shift = offset ? 0.5 : 0.0;
    return (j + shift) * spacing() - 0.5 * box_length;
  }

  Vec3 node(int ix, int iy, int iz) const {
    return {coord(ix), coord(iy), coord(iz)};
  }

  // Storage is x-fastest: idx = ix + n*(iy + n*iz).
  std::size_t index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(n) *
               (static_cast<std::size_t>(iy) +
                static_cast<std::size_t>(n) * static_cast<std::size_t>(iz));
  }

  // Signed integer mode m in [-n/2, n/2) for DFT index j.
  int mode(int j) const { return j < n / 2 ? j : j - n; }

  // Wavenumber k = 2 pi m / L for DFT index j.
  double wavenumber(int j) const {
    return 2.0 * M_PI * mode(j) / box_length;
  }

  friend bool operator==(const Grid3& a, const Grid3& b) {
    return a.n == b.n && a.box_length == b.box_length && a.offset == b.offset;
  }
};

/// Complex scalar field sampled on a Grid3.
struct Field3 {
  Grid3 grid;
  std::vector<complexd> values;

  Field3() = default;
  explicit Field3(const Grid3& g) : grid(g), values(g.size()) {}
  Field3(const Grid3& g, complexd fill) : grid(g), values(g.size(), fill) {}

  std::size_t size() const { return values.size(); }
  complexd& at(int ix, int iy, int iz) { return values[grid.index(ix, iy, iz)]; }
  const complexd& at(int ix, int iy, int iz) const {
    return values[grid.index(ix, iy, iz)];
  }

  bool is_finite() const {
    for (const auto& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

/// Fill a field by evaluating fn at every node.
template <typename Fn>
Field3 make_field(const Grid3& g, Fn&& fn) {
  Field3 f(g);
  for (int iz = 0; iz < g.n; ++iz)
    for (int iy = 0; iy < g.n; ++iy)
      for (int ix = 0; ix < g.n; ++ix)
        f.values[g.index(ix, iy, iz)] = fn(g.node(ix, iy, iz));
  return f;
}

/// Midpoint radial grid on (0, r_max]: r_j = (j + 1/2) r_max / m.
struct RadialGrid {
  double r_max = 0.0;
  int m = 0;

  RadialGrid() = default;
  RadialGrid(double r_max_, int m_) : r_max(r_max_), m(m_) {
    if (!(r_max > 0.0) || m < 2)
      throw ConfigError("RadialGrid: need r_max > 0 and m >= 2");
  }

  double spacing() const { return r_max / m; }
  double node(int j) const { return (j + 0.5) * spacing(); }
};

struct RadialField {
  RadialGrid grid;
  std::vector<double> samples;

  RadialField() = default;
  explicit RadialField(const RadialGrid& g) : grid(g), samples(g.m, 0.0) {}

  // Piecewise-linear interpolation; clamps to the last sample beyond r_max.
  double interp(double r) const {
    const double dr = grid.spacing();
    const double s = r / dr - 0.5;
    if (s <= 0.0) return samples.front();
    const int j = static_cast<int>(s);
    if (j + 1 >= grid.m) return samples.back();
    const double w = s - j;
    return (1.0 - w) * samples[j] + w * samples[j + 1];
  }
};

}  // namespace inls
