#pragma once

// Core scalar and dense-matrix types for the 32-level model
// (two 4-level systems and one qubit, ordered sys1 x sys2 x qubit).

#define EIGEN_DONT_PARALLELIZE
#include <Eigen/Dense>

#include <complex>

namespace darkgate {

using cxd = std::complex<double>;

inline constexpr int kDim = 32;        // 4 * 4 * 2
inline constexpr int kLogicalDim = 4;  // dark subspace l1..l4

using StateVec = Eigen::Matrix<cxd, kDim, 1>;
using Operator = Eigen::Matrix<cxd, kDim, kDim>;
using Gate = Eigen::Matrix<cxd, kLogicalDim, kLogicalDim>;
using Frame = Eigen::Matrix<cxd, kDim, Eigen::Dynamic>;
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

// Execution policy for the data-parallel kernels. Serial is the plain
// reference loop; Parallel uses OpenMP but keeps the same floating-point
// composition order, so both produce bit-identical results.
enum class Execution { Serial, Parallel };

}  // namespace darkgate
