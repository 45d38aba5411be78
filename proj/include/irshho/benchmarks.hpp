#pragma once

#include <cmath>
#include <numbers>

#include "irshho/types.hpp"

// Classic test functions, stated in maximization form (negated): optimum 0 at
// the origin for both.

namespace irshho {

inline double sphere(const Vector& x) { return -x.squaredNorm(); }

inline double rastrigin(const Vector& x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (int i = 0; i < x.size(); ++i)
    s += x[i] * x[i] - 10.0 * std::cos(2.0 * std::numbers::pi * x[i]);
  return -s;
}

}  // namespace irshho
