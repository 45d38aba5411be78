#pragma once

#include <cmath>
#include <numbers>

#include "irshho/rng.hpp"
#include "irshho/types.hpp"

namespace irshho {

// Mantegna's sigma for the numerator gaussian of a beta-stable step.
inline double mantegna_sigma(double beta) {
  const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den =
      std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

// Heavy-tailed step vector via Mantegna's method:
//   step_i = scale * u_i * sigma / |v_i|^(1/beta),  u, v standard normal.
// Entries are always finite; the measure-zero v == 0 draw maps to a zero step.
inline Vector levy_flight(int dim, double beta, double scale, std::mt19937_64& g) {
  Vector step = Vector::Zero(dim);
  if (scale == 0.0) return step;
  const double sigma = mantegna_sigma(beta);
  for (int i = 0; i < dim; ++i) {
    const double u = normal01(g) * sigma;
    const double v = normal01(g);
    const double s = scale * u / std::pow(std::abs(v), 1.0 / beta);
    step[i] = std::isfinite(s) ? s : 0.0;
  }
  return step;
}

}  // namespace irshho
