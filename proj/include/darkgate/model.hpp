#pragma once

#include "darkgate/basis.hpp"
#include "darkgate/types.hpp"

#include <array>

namespace darkgate {

// Control triple (lambda1, lambda2, lambda3), angular-frequency units
// (hbar = 1). The admissible region excludes the two degeneracy surfaces
// where a mixing angle is undefined.
struct ParameterPoint {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  bool in_parameter_space() const;
};

struct MixingAngles {
  double theta = 0.0;        // arccos(l2 / sqrt(l1^2 + l2^2)), radians
  double theta_prime = 0.0;  // arccos(l3 / sqrt(l1^2 + l3^2)), radians
};

// Two-stage control schedule with quarter-period sin/cos ramps. The ramps
// move (theta, theta') linearly in s and keep the bright gap constant at
// omega. Stage 1: (0,0) -> (pi/2, pi/2); stage 2: (pi/2, pi/2) -> (0, pi).
struct ScheduleSpec {
  double omega = 1.0;
  int samples_per_stage = 2001;
  // Permits omega == 0 (zero Hamiltonian) for degenerate-input tests only.
  bool allow_zero_amplitude = false;

  void validate() const;
};

// The instantaneous zero-eigenvalue frame, fixed order (l1, l2, l3, l4)
// so the target gate is diag(1, 1, 1, -1).
struct DarkFrame {
  StateVec l1, l2, l3, l4;

  Frame as_frame() const;
  const StateVec& column(int i) const;
};

// Couplings lambda1 |e1 0><g1 1| - lambda2 |e2 0><g2 1| - lambda3
// |e'2 0><g'2 1| + h.c. Rows and columns for the unused sys1 levels
// e1', g1' stay identically zero. Total in the lambdas; no domain check.
Operator build_hamiltonian(double lambda1, double lambda2, double lambda3);

// Same, but requires p.in_parameter_space(); throws
// std::invalid_argument("outside parameter space") otherwise.
Operator hamiltonian(const ParameterPoint& p);

MixingAngles mixing_angles(const ParameterPoint& p);

// Point on the ramp at path parameter s in [0, 1] of the given stage (1|2).
ParameterPoint schedule_sample(const ScheduleSpec& spec, int stage, double s);

// Target angle trajectory of the ramps, linear in s.
MixingAngles schedule_target_angles(int stage, double s);

DarkFrame dark_frame(const MixingAngles& a);

// Gap between the dark (zero) eigenvalue and the nearest bright one:
// min(sqrt(l1^2+l2^2), sqrt(l1^2+l3^2)).
double spectral_gap(const ParameterPoint& p);

// Max |H| matrix element connecting two different blocks of the invariant
// decomposition: span{l1}, span{l2}, the two bright 3-level blocks, and
// the complement. Exactly zero for every parameter point.
double block_residual(const ParameterPoint& p);

// Index sets of the invariant blocks (block id 0..3; complement gets 4).
inline constexpr std::array<int, 1> kBlockL1{kIdxG1G2Q0};
inline constexpr std::array<int, 1> kBlockL2{kIdxG1G2pQ0};
inline constexpr std::array<int, 3> kBlockBright3{kIdxE1G2Q0, kIdxG1E2Q0,
                                                  kIdxG1G2Q1};
inline constexpr std::array<int, 3> kBlockBright4{kIdxE1G2pQ0, kIdxG1E2pQ0,
                                                  kIdxG1G2pQ1};
int block_id(int basis_index);

// A parameter point with lambda1 >= 0 realizing the given angles; used by
// randomized dark-frame checks. Valid whenever sin(theta) != 0 and
// sin(theta') != 0.
ParameterPoint parameters_for_angles(const MixingAngles& a, double omega = 1.0);

}  // namespace darkgate
