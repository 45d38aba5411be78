#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "irshho/beamforming.hpp"
#include "irshho/channel.hpp"
#include "irshho/types.hpp"

// Reference solvers: the no-surface MRT bound, alternating optimization
// (phase alignment + matched transmit filter), the single-antenna closed
// form, and a small-instance grid search.

namespace irshho {

struct BaselineResult {
  std::string scheme;
  ComplexVector w;
  Vector theta;  // empty when the surface is absent
  double power_watts = 0.0;
  int iterations = 0;
  std::vector<double> power_trace;  // power after each full alternating round
};

// MRT on the direct link with the surface switched off: the best any
// transmitter can do without reflection, power = p_ap * ||h_d||^2.
inline BaselineResult no_irs_mrt(const ChannelSet& ch, double p_ap) {
  const double norm = ch.h_d.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("no_irs_mrt: direct channel is zero");
  BaselineResult r;
  r.scheme = "no-irs";
  r.w = std::sqrt(p_ap) / norm * ch.h_d;
  r.power_watts = p_ap * norm * norm;
  r.iterations = 0;
  return r;
}

inline BaselineResult no_irs_snr(const ChannelSet& ch, double p_ap, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("no_irs_snr: sigma2 must be positive");
  return no_irs_mrt(ch, p_ap);
}

// For a fixed transmit vector, phases that rotate every reflected term onto
// the direct term's phase. Achieves |h_d^H w| + sum_n |conj(h_r_n) (Gw)_n|,
// the triangle-inequality ceiling, so it maximizes power over theta.
inline Vector optimal_phases_given_w(const ChannelSet& ch, const ComplexVector& w) {
  const int n = static_cast<int>(ch.h_r.size());
  const Complex direct = ch.h_d.adjoint() * w;
  const double target = std::abs(direct) == 0.0 ? 0.0 : std::arg(direct);
  const ComplexVector gw = ch.g * w;
  Vector theta(n);
  for (int i = 0; i < n; ++i) {
    const Complex term = std::conj(ch.h_r[i]) * gw[i];
    theta[i] = std::abs(term) == 0.0 ? 0.0 : wrap_angle(target - std::arg(term));
  }
  return theta;
}

// Alternate phase alignment with the matched full-power transmit filter.
// Each half-step maximizes power with the other block fixed, so the power
// sequence cannot decrease.
inline BaselineResult alternating_optimize(const ChannelSet& ch, double p_ap,
                                           double tol = 1e-8, int max_iter = 1000) {
  if (!(tol > 0.0)) throw std::invalid_argument("alternating_optimize: tol must be positive");
  if (max_iter < 1)
    throw std::invalid_argument("alternating_optimize: max_iter must be positive");
  const int n = static_cast<int>(ch.h_r.size());

  BaselineResult r;
  r.scheme = "ao";
  if (n == 0) {
    r = no_irs_mrt(ch, p_ap);
    r.scheme = "ao";
    return r;
  }

  const double norm_d = ch.h_d.norm();
  if (!(norm_d > 0.0))
    throw std::invalid_argument("alternating_optimize: direct channel is zero");
  ComplexVector w = std::sqrt(p_ap) / norm_d * ch.h_d;
  Vector theta = Vector::Zero(n);
  double power = received_power(ch, {w, theta});

  for (int it = 1; it <= max_iter; ++it) {
    theta = optimal_phases_given_w(ch, w);
    const ComplexVector row = effective_row(ch, theta);
    const double row_norm = row.norm();
    if (row_norm > 0.0) w = std::sqrt(p_ap) / row_norm * row.conjugate();
    const double next = received_power(ch, {w, theta});
    if (next < power * (1.0 - 1e-12))
      throw std::logic_error("alternating_optimize: power decreased");
    r.power_trace.push_back(next);
    r.iterations = it;
    const bool converged = next - power <= tol * std::max(power, 1e-300);
    power = next;
    if (converged) break;
  }

  r.w = std::move(w);
  r.theta = std::move(theta);
  r.power_watts = power;
  return r;
}

// Global optimum for a single transmit antenna: all terms phase-aligned at
// full power, p_ap * (|h_d| + sum_n |h_r_n||g_n|)^2.
inline double closed_form_optimum_m1(const ChannelSet& ch, double p_ap) {
  if (ch.h_d.size() != 1)
    throw std::invalid_argument("closed_form_optimum_m1: needs exactly one antenna");
  double amp = std::abs(ch.h_d[0]);
  for (int i = 0; i < ch.h_r.size(); ++i) amp += std::abs(ch.h_r[i]) * std::abs(ch.g(i, 0));
  return p_ap * amp * amp;
}

namespace detail {

// Exact maximum of |c0 + sum_n c_n e^{j theta_n}|^2 over theta_n on the
// uniform L-point grid. For every pointing direction omega the best grid
// assignment snaps each theta_n to the grid point nearest omega - arg(c_n),
// and the optimum direction lies at one of the O(N L) snap breakpoints, so a
// sweep over breakpoints (plus midpoints, to be safe on ties) is exhaustive.
inline double grid_max_power_m1(Complex c0, const std::vector<Complex>& terms, int levels) {
  const double step = 2.0 * std::numbers::pi / levels;
  std::vector<double> candidates;
  candidates.reserve(terms.size() * levels + levels + 2);
  if (std::abs(c0) > 0.0) candidates.push_back(std::arg(c0));
  candidates.push_back(0.0);
  for (const Complex& c : terms) {
    if (std::abs(c) == 0.0) continue;
    const double base = std::arg(c);
    for (int k = 0; k < levels; ++k) candidates.push_back(base + (k + 0.5) * step);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<double> probes = candidates;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double next = i + 1 < candidates.size() ? candidates[i + 1]
                                                  : candidates.front() + 2.0 * std::numbers::pi;
    probes.push_back(0.5 * (candidates[i] + next));
  }

  double best = std::norm(c0);  // all terms dropped is never optimal, safe floor
  for (double omega : probes) {
    Complex v = c0;
    for (const Complex& c : terms) {
      if (std::abs(c) == 0.0) continue;
      const double want = omega - std::arg(c);
      const double snapped = std::round(want / step) * step;
      v += c * std::polar(1.0, snapped);
    }
    best = std::max(best, std::norm(v));
  }
  return best;
}

}  // namespace detail

// Grid-search oracle. w is restricted to full-power beamformers with phases
// on the L-point grid (and, for M=2, a gridded power split); theta is on the
// same grid. For M=1 the transmit phase is a global rotation, so the grid
// optimum is computed exactly by a direction sweep instead of enumeration.
inline double brute_force(const ChannelSet& ch, double p_ap, int phase_levels) {
  const int m = static_cast<int>(ch.h_d.size());
  const int n = static_cast<int>(ch.h_r.size());
  if (phase_levels < 1) throw std::invalid_argument("brute_force: phase_levels must be >= 1");
  if (m > 2) throw std::invalid_argument("brute_force: enumeration guard exceeded");
  const double budget = 1e7;
  const double amp = std::sqrt(p_ap);
  const int l = phase_levels;
  const double step = 2.0 * std::numbers::pi / l;

  if (m == 1) {
    if (static_cast<double>(m) * std::pow(l, 1.0) * (n * l + l + 2) > budget)
      throw std::invalid_argument("brute_force: enumeration guard exceeded");
    if (l == 1) {
      // single grid point: everything at phase zero
      Complex v = amp * std::conj(ch.h_d[0]);
      for (int i = 0; i < n; ++i) v += amp * std::conj(ch.h_r[i]) * ch.g(i, 0);
      return std::norm(v);
    }
    std::vector<Complex> terms(n);
    for (int i = 0; i < n; ++i) terms[i] = amp * std::conj(ch.h_r[i]) * ch.g(i, 0);
    return detail::grid_max_power_m1(amp * std::conj(ch.h_d[0]), terms, l);
  }

  // M = 2: enumerate a power split s on {k/L} and both transmit phases and
  // all surface phases on the grid.
  if (static_cast<double>(m) * std::pow(static_cast<double>(l), m + n) > budget)
    throw std::invalid_argument("brute_force: enumeration guard exceeded");
  double best = 0.0;
  std::vector<int> theta_idx(n, 0);
  ComplexVector w(2);
  Vector theta = Vector::Zero(n);
  for (int si = 0; si <= l; ++si) {
    const double s = static_cast<double>(si) / l;
    const double a0 = amp * std::sqrt(1.0 - s);
    const double a1 = amp * std::sqrt(s);
    for (int p0 = 0; p0 < l; ++p0)
      for (int p1 = 0; p1 < l; ++p1) {
        w[0] = std::polar(a0, p0 * step);
        w[1] = std::polar(a1, p1 * step);
        std::fill(theta_idx.begin(), theta_idx.end(), 0);
        while (true) {
          for (int i = 0; i < n; ++i) theta[i] = theta_idx[i] * step;
          best = std::max(best, received_power(ch, {w, theta}));
          int carry = 0;
          while (carry < n && ++theta_idx[carry] == l) theta_idx[carry++] = 0;
          if (carry == n) break;
        }
      }
  }
  return best;
}

}  // namespace irshho
