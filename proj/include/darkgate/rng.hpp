#pragma once

#include "darkgate/model.hpp"
#include "darkgate/types.hpp"

#include <cstdint>
#include <random>

namespace darkgate {

// Engine for a (seed, stream) pair. Per-item streams keep randomized
// suites deterministic regardless of loop scheduling.
std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream = 0);

double random_phase(std::mt19937_64& g);                  // uniform (-pi, pi]
StateVec random_state(std::mt19937_64& g);                // Haar-ish unit vector
ComplexMatrix random_unitary(int k, std::mt19937_64& g);  // polar of a Ginibre draw
ComplexMatrix random_matrix(int k, std::mt19937_64& g);

// Random orthonormal frame of k columns in the 32-dim space.
Frame random_frame(int k, std::mt19937_64& g);

// Uniform angles (theta, theta') in [0, pi/2] x [0, pi].
MixingAngles random_mixing_angles(std::mt19937_64& g);

// Uniform lambdas in [-2, 2]^3, redrawn until inside the parameter space.
ParameterPoint random_parameter_point(std::mt19937_64& g);

}  // namespace darkgate
