#pragma once

#include "darkgate/model.hpp"
#include "darkgate/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace darkgate {

struct TimeGrid {
  double total_time_per_stage = 200.0;  // T, inverse angular-frequency units
  int steps_per_stage = 4000;           // N >= 2

  void validate() const;
  double dt() const { return total_time_per_stage / steps_per_stage; }
};

struct Snapshot {
  double s;  // global path parameter over both stages, in [0, 1]
  std::array<double, kLogicalDim> populations;  // |<l_i(s)|U|l_i(0)>|^2
  double leakage;                               // 1 - |M(s)|_F^2 / 4
};

struct PropagationResult {
  Operator total_unitary;
  Gate gate_matrix;              // <ref_i|U|ref_j>, reference dark frame
  double leakage = 0.0;          // 1 - |gate|_F^2 / 4
  double unitarity_defect = 0.0;
  std::vector<Snapshot> snapshots;  // filled only when requested
};

struct PropagateOptions {
  Execution exec = Execution::Parallel;
  bool record_snapshots = false;
};

// exp(-i H dt) via Hermitian eigendecomposition; unconditionally unitary.
Operator step_propagator(const Operator& h, double dt);

// Midpoint-sampled step k of n within a stage of the ramped schedule.
Operator schedule_step_propagator(const ScheduleSpec& spec, int stage, int k,
                                  int n, double dt);

// Time-ordered product of midpoint-sampled step propagators over stage 1
// then stage 2, plus the logical gate read out against the reference dark
// frame at (theta, theta') = (0, 0).
PropagationResult propagate(const ScheduleSpec& spec, const TimeGrid& grid,
                            const PropagateOptions& opt = {});

// Same propagation kernel over an arbitrary Hamiltonian path h(t),
// t in [0, total_time). Used by degenerate-input tests.
Operator propagate_hamiltonian_path(
    const std::function<Operator(double)>& h_of_t, double total_time,
    int steps, Execution exec = Execution::Parallel);

// M_ij = <final_i|U|initial_j>.
Gate extract_logical_gate(const Operator& u, const Frame& initial,
                          const Frame& final);

double leakage_of(const Gate& m);

// Frobenius distance to the target after removing one global phase
// (the phase maximizing |trace(target^dagger M)|).
double phase_aligned_error(const Gate& m, const Gate& target);
double alignment_phase(const Gate& m, const Gate& target);

Gate target_gate();  // diag(1, 1, 1, -1)

struct ScanRow {
  double omega_t;
  double leakage;
  double gate_error;
  Gate gate;
};

// One propagation per total time T = omega_t / omega, all with the same
// step count per stage.
std::vector<ScanRow> adiabatic_scan(const ScheduleSpec& spec,
                                    const std::vector<double>& omega_t_list,
                                    int steps_per_stage,
                                    Execution exec = Execution::Parallel);

}  // namespace darkgate
