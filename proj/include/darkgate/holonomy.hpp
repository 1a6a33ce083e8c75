#pragma once

#include "darkgate/linalg.hpp"
#include "darkgate/model.hpp"
#include "darkgate/types.hpp"

#include <optional>
#include <vector>

namespace darkgate {

enum class FiberKind { L3, L4, Full };

// Discretized path of fibers (frames of fixed width) over s in [0, 1].
struct FiberPath {
  std::vector<double> s;       // strictly increasing
  std::vector<Frame> fibers;   // same width throughout

  int width() const;
  std::size_t size() const { return fibers.size(); }
  // Checks monotone s, consistent widths, and full-rank consecutive
  // overlaps (smallest singular value >= 0.1).
  void validate() const;
};

struct TransportedState {
  std::vector<StateVec> representatives;
  const StateVec& final_representative() const { return representatives.back(); }
};

struct BlochPath {
  std::vector<double> s;
  std::vector<Vec3> points;  // unit vectors
};

struct HolonomyReport {
  double beta_l3 = 0.0;
  double beta_l4 = 0.0;
  Gate wilson = Gate::Identity();
  double solid_angle = 0.0;
  std::vector<double> closure_angles;
  std::optional<double> dynamics_distance;
};

// Dark fibers along the two-stage schedule, samples_per_stage points per
// stage with the shared midpoint stored once (2M - 1 samples total).
FiberPath sample_fiber_path(const ScheduleSpec& spec, FiberKind kind,
                            int samples_per_stage,
                            Execution exec = Execution::Parallel);

// Discrete parallel transport of a line-bundle path: consecutive overlaps
// are phase-aligned to be real positive.
TransportedState parallel_transport(const FiberPath& path);

// Re-gauges the final fiber basis so its overlap with the initial basis is
// the Hermitian positive polar factor; the minimizer of |psi(0) - psi(1)|.
Frame most_parallel_endpoint(const Frame& initial, const Frame& final);

// Gauge-invariant phase of an open line-bundle path, in (-pi, pi].
double noncyclic_phase(const FiberPath& path);

// Ordered product of per-segment polar factors polar(F_{k+1}^dagger F_k).
ComplexMatrix transport_chain(const FiberPath& path,
                              Execution exec = Execution::Parallel);

// Holonomy of the full dark-bundle path, expressed in the initial frame
// basis after most-parallel endpoint gauge fixing:
//   W = polar(F_0^dagger F_N) * transport_chain(path).
Gate wilson_line(const FiberPath& path, Execution exec = Execution::Parallel);

// Map an l4-type path into the Bloch sphere of span{|e1 g'2 0>, |g1 e'2 0>}:
// amplitudes (a, b) -> (2 Re(conj(a) b), 2 Im(conj(a) b), |a|^2 - |b|^2).
BlochPath bloch_path(const FiberPath& path);

// Signed solid angle enclosed by a closed path of unit vectors, summed from
// spherical-triangle contributions and reported modulo 4*pi into
// (-2*pi, 2*pi]. With `closed` set, a path whose endpoints are antipodal is
// completed by its antipodal image (projective double-cover closure).
double solid_angle(const BlochPath& path, bool closed);

// Principal angles between the first and last fiber of a width-4 path.
std::vector<double> grassmann_closure(const FiberPath& path);

// Convenience bundle: betas, Wilson line, Bloch path solid angle, and
// closure angles at the given sampling resolution.
HolonomyReport holonomy_report(const ScheduleSpec& spec, int samples_per_stage,
                               Execution exec = Execution::Parallel);

}  // namespace darkgate
