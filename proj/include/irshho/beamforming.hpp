#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "irshho/channel.hpp"
#include "irshho/types.hpp"

// Joint transmit/reflect beamforming as a box-bounded real optimization
// problem. The search vector packs the beamformer in polar form plus the
// surface phase shifts; the fitness is received power with a penalty that
// pushes the transmit power back under the budget.

namespace irshho {

struct ProblemInstance {
  ChannelSet channels;
  double p_ap = 0.0;    // transmit power budget, watts
  double sigma2 = 0.0;  // noise power, watts
  double mu = 1.0;      // penalty factor
  int m = 0;
  int n = 0;

  int dimension() const { return 2 * m + n; }
};

inline void validate(const ProblemInstance& inst) {
  if (!(inst.p_ap > 0.0)) throw std::invalid_argument("ProblemInstance: p_ap must be positive");
  if (!(inst.sigma2 > 0.0))
    throw std::invalid_argument("ProblemInstance: sigma2 must be positive");
  if (!(inst.mu > 0.0)) throw std::invalid_argument("ProblemInstance: mu must be positive");
  if (inst.channels.h_d.size() != inst.m || inst.channels.h_r.size() != inst.n ||
      inst.channels.g.rows() != inst.n || inst.channels.g.cols() != inst.m)
    throw std::invalid_argument("ProblemInstance: channel dimensions inconsistent");
}

struct BeamformingSolution {
  ComplexVector w;  // transmit beamformer, length M
  Vector theta;     // surface phase shifts, length N
};

inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

// x = [psi(M), phi(M), theta(N)]: w_m = psi_m * e^{j phi_m}, theta verbatim.
inline BeamformingSolution decode(const Vector& x, int m, int n) {
  if (x.size() != 2 * m + n)
    throw std::invalid_argument("decode: encoded vector length must be 2M+N");
  BeamformingSolution s;
  s.w.resize(m);
  for (int i = 0; i < m; ++i) s.w[i] = std::polar(x[i], x[m + i]);
  s.theta = x.tail(n);
  return s;
}

inline Vector encode(const BeamformingSolution& s) {
  const int m = static_cast<int>(s.w.size());
  const int n = static_cast<int>(s.theta.size());
  Vector x(2 * m + n);
  for (int i = 0; i < m; ++i) {
    x[i] = std::abs(s.w[i]);
    x[m + i] = x[i] == 0.0 ? 0.0 : wrap_angle(std::arg(s.w[i]));
  }
  x.tail(n) = s.theta;
  return x;
}

// Combined surface-plus-direct row vector (h_r^H Theta G + h_d^H) as a
// length-M column of its conjugates, so power = |row . w|^2.
inline ComplexVector effective_row(const ChannelSet& ch, const Vector& theta) {
  const int n = static_cast<int>(ch.h_r.size());
  if (theta.size() != n) throw std::invalid_argument("effective_row: theta length mismatch");
  ComplexVector coeff(n);
  for (int i = 0; i < n; ++i) coeff[i] = std::conj(ch.h_r[i]) * std::polar(1.0, theta[i]);
  ComplexVector row = ch.g.transpose() * coeff;  // (h_r^H Theta G)^T
  row += ch.h_d.conjugate();
  return row;
}

inline double received_power(const ChannelSet& ch, const BeamformingSolution& s) {
  if (s.w.size() != ch.h_d.size() || ch.g.cols() != ch.h_d.size() ||
      ch.g.rows() != ch.h_r.size())
    throw std::invalid_argument("received_power: dimension mismatch");
  const Complex amp = effective_row(ch, s.theta).cwiseProduct(s.w).sum();
  return std::norm(amp);
}

inline double penalty(const ComplexVector& w, double p_ap, double mu) {
  const double used = w.squaredNorm();
  return used <= p_ap ? 0.0 : -mu * (used - p_ap);
}

inline double fitness(const Vector& x, const ProblemInstance& inst) {
  const BeamformingSolution s = decode(x, inst.m, inst.n);
  return received_power(inst.channels, s) + penalty(s.w, inst.p_ap, inst.mu);
}

inline auto make_objective(const ProblemInstance& inst) {
  return [&inst](const Vector& x) { return fitness(x, inst); };
}

inline std::pair<Vector, Vector> search_bounds(const ProblemInstance& inst) {
  const int d = inst.dimension();
  Vector lb = Vector::Zero(d);
  Vector ub(d);
  ub.head(inst.m).setConstant(std::sqrt(inst.p_ap));
  ub.tail(inst.m + inst.n).setConstant(2.0 * std::numbers::pi);
  return {lb, ub};
}

// Full-budget transmit beamformer matched to the direct link, neutral (zero)
// surface phases. The standard warm start for this problem.
inline Vector mrt_seed(const ProblemInstance& inst) {
  const double norm = inst.channels.h_d.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("mrt_seed: direct channel is zero");
  BeamformingSolution s;
  s.w = std::sqrt(inst.p_ap) / norm * inst.channels.h_d;
  s.theta = Vector::Zero(inst.n);
  const auto [lb, ub] = search_bounds(inst);
  return encode(s).cwiseMax(lb).cwiseMin(ub);
}

inline double snr_db(double power_watts, double sigma2_watts) {
  if (!(sigma2_watts > 0.0)) throw std::invalid_argument("snr_db: sigma2 must be positive");
  if (power_watts <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(power_watts / sigma2_watts);
}

}  // namespace irshho
