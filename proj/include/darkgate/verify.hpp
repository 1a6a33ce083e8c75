#pragma once

#include "darkgate/config.hpp"
#include "darkgate/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace darkgate {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string reason;
  double seconds = 0.0;
};

// Measured quantities shared with the acceptance suite.

// max_i ||H l_i|| over `count` random (theta, theta') pairs.
double max_dark_annihilation_residual(std::uint64_t seed, int count);

// max_ij |<l_i|H|l_j>| over the same kind of draws.
double max_dark_matrix_element(std::uint64_t seed, int count);

// max block_residual over `count` random admissible parameter points.
double max_block_residual_random(std::uint64_t seed, int count);

struct GaugeDrift {
  double beta = 0.0;    // circular drift of the l4 noncyclic phase
  double wilson = 0.0;  // Frobenius drift of the gauge-fixed Wilson line
};

// Re-gauges the fiber paths `regaugings` times: every sample of the l4
// path gets an independent phase; every frame of the full path except the
// first (the basis the Wilson line is expressed in) gets an independent
// 4x4 unitary.
GaugeDrift gauge_invariance_drift(std::uint64_t seed, int samples_per_stage,
                                  int regaugings);

// Every invariant suite from the library modules, with the config seed.
std::vector<CheckResult> run_verify_suite(const ExperimentConfig& config);

}  // namespace darkgate
