#pragma once

#include "darkgate/types.hpp"

#include <vector>

namespace darkgate {

// <A_i|B_j> for two frames with equal column count.
// Throws std::invalid_argument("dimension mismatch") otherwise.
ComplexMatrix overlap_matrix(const Frame& a, const Frame& b);

// Unitary polar factor U*V^dagger of the SVD M = U*S*V^dagger; the unitary
// closest to M in Frobenius norm. Throws std::runtime_error("degenerate
// overlap") when the smallest singular value is <= 1e-10.
ComplexMatrix polar_unitary(const ComplexMatrix& m);

// Principal angles between the column spans of two frames: arccos of the
// singular values of overlap_matrix(a, b), clamped to [0, 1] before arccos.
// Returned ascending, all in [0, pi/2].
std::vector<double> principal_angles(const Frame& a, const Frame& b);

// max |Gram(f) - I|; zero for an orthonormal frame.
double gram_defect(const Frame& f);

// max |A - A^dagger|.
double hermiticity_defect(const Operator& a);

// max |A^dagger A - I|.
double unitarity_defect(const ComplexMatrix& a);

// Wrap a phase into (-pi, pi]; -pi maps to +pi.
double wrap_phase(double phi);

// Distance between two phases on the circle, in [0, pi].
double circular_distance(double a, double b);

}  // namespace darkgate
