#pragma once

#include <Eigen/Core>

#include <complex>

namespace irshho {

using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

}  // namespace irshho
