// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_TYPES_HPP
#define SBFD_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace sbfd
{

using Complex = std::complex<double>;

using Point = Eigen::Vector2d;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Two displacement components per boundary node.
inline constexpr int kDofsPerNode = 2;

}  // namespace sbfd

#endif  // SBFD_TYPES_HPP
