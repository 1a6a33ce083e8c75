#include "darkgate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace darkgate {

ComplexMatrix overlap_matrix(const Frame& a, const Frame& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("dimension mismatch");
  }
  return a.adjoint() * b;
}

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("dimension mismatch");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(m.cols() - 1) <= 1e-10) {
    throw std::runtime_error("degenerate overlap");
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::vector<double> principal_angles(const Frame& a, const Frame& b) {
  const ComplexMatrix ov = overlap_matrix(a, b);
  Eigen::JacobiSVD<ComplexMatrix> svd(ov);
  std::vector<double> angles(static_cast<std::size_t>(ov.cols()));
  for (Eigen::Index i = 0; i < ov.cols(); ++i) {
    // Singular values can exceed 1 by ~1e-16; clamp before arccos.
    angles[static_cast<std::size_t>(i)] =
        std::acos(std::clamp(svd.singularValues()(i), 0.0, 1.0));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double gram_defect(const Frame& f) {
  const ComplexMatrix g = f.adjoint() * f;
  return (g - ComplexMatrix::Identity(g.rows(), g.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double hermiticity_defect(const Operator& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& a) {
  return (a.adjoint() * a - ComplexMatrix::Identity(a.cols(), a.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double wrap_phase(double phi) {
  constexpr double pi = std::numbers::pi;
  double x = std::remainder(phi, 2.0 * pi);  // lands in [-pi, pi]
  if (x <= -pi) {
    x += 2.0 * pi;
  }
  return x;
}

double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

}  // namespace darkgate
