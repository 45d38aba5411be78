#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "irshho/rng.hpp"
#include "irshho/types.hpp"
#include "irshho/units.hpp"

// Narrowband channel model for an access point, a reflecting surface, and a
// single-antenna user on a 2-D plane. Distance-based path loss with per-link
// exponents, Rayleigh fading on the links involving the user, and a rank-1
// line-of-sight AP-surface link.

namespace irshho {

struct Geometry {
  Eigen::Vector2d ap{0.0, 0.0};
  Eigen::Vector2d irs{51.0, 0.0};
  Eigen::Vector2d user{51.0, 2.0};
};

inline Geometry geometry_for_user_distance(double d) {
  Geometry g;
  g.user = {d, 2.0};
  return g;
}

inline double distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a - b).norm();
}

// Per-link large-scale parameters, all in dB except the exponent.
struct LinkParams {
  double reference_loss_db = 30.0;  // loss at 1 m
  double pathloss_exponent = 2.0;
  double penetration_loss_db = 0.0;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
};

// Average channel power gain at distance d (linear scale).
inline double path_gain_linear(double d, const LinkParams& p) {
  if (!(d > 0.0)) throw std::invalid_argument("path_gain_linear: distance must be positive");
  const double loss_db =
      p.reference_loss_db + p.penetration_loss_db - p.tx_gain_dbi - p.rx_gain_dbi;
  return db_to_linear(-loss_db) * std::pow(d, -p.pathloss_exponent);
}

// rows x cols matrix of i.i.d. CN(0, gain) entries. Real then imaginary part
// per entry, column-major, so the draw count and order are pinned.
inline ComplexMatrix rayleigh_matrix(int rows, int cols, double gain, std::mt19937_64& g) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("rayleigh_matrix: dimensions must be positive");
  if (!(gain > 0.0)) throw std::invalid_argument("rayleigh_matrix: gain must be positive");
  const double s = std::sqrt(gain / 2.0);
  ComplexMatrix h(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) h(r, c) = Complex(s * normal01(g), s * normal01(g));
  return h;
}

enum class LosMode {
  geometric,     // array-response outer product from the node geometry
  random_phase,  // outer product of unit-modulus vectors with random phases
};

// Deterministic rank-1 line-of-sight matrix between an M-element uniform
// linear array at the AP (elements along the global y axis) and an nx-by-ny
// surface in the x-z plane (element n = ix*ny + iy, row-major), both at
// half-wavelength spacing. Every entry has modulus sqrt(gain).
inline ComplexMatrix los_matrix(int nx, int ny, int m, double gain, const Geometry& geo,
                                LosMode mode = LosMode::geometric,
                                std::mt19937_64* g = nullptr) {
  if (nx < 1 || ny < 1 || m < 1)
    throw std::invalid_argument("los_matrix: dimensions must be positive");
  if (!(gain > 0.0)) throw std::invalid_argument("los_matrix: gain must be positive");
  const int n = nx * ny;
  const double amp = std::sqrt(gain);
  ComplexVector at_irs(n), at_ap(m);

  if (mode == LosMode::random_phase) {
    if (g == nullptr)
      throw std::invalid_argument("los_matrix: random_phase mode needs an engine");
    for (int i = 0; i < n; ++i)
      at_irs[i] = std::polar(1.0, uniform_in(*g, 0.0, 2.0 * std::numbers::pi));
    for (int i = 0; i < m; ++i)
      at_ap[i] = std::polar(1.0, uniform_in(*g, 0.0, 2.0 * std::numbers::pi));
    return amp * at_irs * at_ap.transpose();
  }

  const Eigen::Vector2d dir = (geo.irs - geo.ap).normalized();
  // AP elements sit along y; the phase ramp depends on the y component of the
  // departure direction. Surface rows step along x, columns along z; only the
  // x step sees a propagation phase for in-plane geometry.
  const double u_y = dir.y();
  const double u_x = dir.x();
  for (int i = 0; i < m; ++i) at_ap[i] = std::polar(1.0, std::numbers::pi * i * u_y);
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy)
      at_irs[ix * ny + iy] = std::polar(1.0, std::numbers::pi * ix * u_x);
  return amp * at_irs * at_ap.transpose();
}

// Large-scale defaults: 30 dB reference loss at 1 m everywhere; exponent 3.5
// with 10 dB penetration on the direct AP-user link, 2.2 in free space
// between AP and surface, 2.8 with 10 dB penetration and 5 dBi element gain
// from surface to user.
struct ChannelParams {
  int m = 8;    // AP antennas
  int nx = 5;   // surface elements per row
  int ny = 10;  // surface elements per column
  LinkParams ap_user{30.0, 3.5, 10.0, 0.0, 0.0};
  LinkParams ap_irs{30.0, 2.2, 0.0, 0.0, 0.0};
  LinkParams irs_user{30.0, 2.8, 10.0, 5.0, 0.0};
  LosMode los_mode = LosMode::geometric;

  int n() const { return nx * ny; }
};

struct ChannelSet {
  ComplexVector h_d;  // AP -> user, M
  ComplexMatrix g;    // AP -> surface, N x M
  ComplexVector h_r;  // surface -> user, N
};

// One fading realization for the given geometry. Draw order: h_d, G (only in
// random-phase mode), h_r, so a fixed engine state pins every entry.
inline ChannelSet realize_channels(const ChannelParams& p, const Geometry& geo,
                                   std::mt19937_64& g) {
  const double d_au = distance(geo.ap, geo.user);
  const double d_ai = distance(geo.ap, geo.irs);
  const double d_iu = distance(geo.irs, geo.user);

  ChannelSet ch;
  ch.h_d = rayleigh_matrix(p.m, 1, path_gain_linear(d_au, p.ap_user), g).col(0);
  ch.g = los_matrix(p.nx, p.ny, p.m, path_gain_linear(d_ai, p.ap_irs), geo, p.los_mode, &g);
  ch.h_r = rayleigh_matrix(p.n(), 1, path_gain_linear(d_iu, p.irs_user), g).col(0);
  return ch;
}

}  // namespace irshho
