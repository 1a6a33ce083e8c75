#include "darkgate/dynamics.hpp"

#include "darkgate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace darkgate {

void TimeGrid::validate() const {
  if (!(total_time_per_stage > 0.0)) {
    throw std::invalid_argument("total_time_per_stage must be > 0");
  }
  if (steps_per_stage < 2) {
    throw std::invalid_argument("steps_per_stage must be >= 2");
  }
}

Operator step_propagator(const Operator& h, double dt) {
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  Eigen::Matrix<cxd, kDim, 1> phases;
  for (int i = 0; i < kDim; ++i) {
    phases(i) = std::exp(cxd(0.0, -es.eigenvalues()(i) * dt));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Operator schedule_step_propagator(const ScheduleSpec& spec, int stage, int k,
                                  int n, double dt) {
  const double s_mid = (k + 0.5) / n;
  const ParameterPoint p = schedule_sample(spec, stage, s_mid);
  return step_propagator(build_hamiltonian(p.lambda1, p.lambda2, p.lambda3),
                         dt);
}

namespace {

Snapshot make_snapshot(const Operator& acc, const Frame& ref, int stage,
                       double s_stage) {
  const double s_global = 0.5 * (stage - 1) + 0.5 * s_stage;
  const Frame inst =
      dark_frame(schedule_target_angles(stage, s_stage)).as_frame();
  const Gate m = inst.adjoint() * (acc * ref);
  Snapshot snap;
  snap.s = s_global;
  for (int i = 0; i < kLogicalDim; ++i) {
    snap.populations[static_cast<std::size_t>(i)] = std::norm(m(i, i));
  }
  snap.leakage = leakage_of(m);
  return snap;
}

}  // namespace

PropagationResult propagate(const ScheduleSpec& spec, const TimeGrid& grid,
                            const PropagateOptions& opt) {
  spec.validate();
  grid.validate();
  const int n = grid.steps_per_stage;
  const double dt = grid.dt();
  const Frame ref = dark_frame(MixingAngles{0.0, 0.0}).as_frame();

  Operator acc = Operator::Identity();
  PropagationResult result;
  if (opt.record_snapshots) {
    result.snapshots.reserve(static_cast<std::size_t>(2 * n + 1));
    result.snapshots.push_back(make_snapshot(acc, ref, 1, 0.0));
  }

  for (int stage = 1; stage <= 2; ++stage) {
    if (opt.exec == Execution::Serial) {
      for (int k = 0; k < n; ++k) {
        acc = schedule_step_propagator(spec, stage, k, n, dt) * acc;
        if (opt.record_snapshots) {
          result.snapshots.push_back(
              make_snapshot(acc, ref, stage, (k + 1.0) / n));
        }
      }
    } else {
      // Steps are independent; build them in parallel batches, then fold
      // them into the product in step order. The fold order matches the
      // serial path, so both give bit-identical results.
      constexpr int kBatch = 256;
      std::vector<Operator> steps(
          static_cast<std::size_t>(std::min(kBatch, n)));
      for (int kb = 0; kb < n; kb += kBatch) {
        const int count = std::min(kBatch, n - kb);
#pragma omp parallel for schedule(static)
        for (int j = 0; j < count; ++j) {
          steps[static_cast<std::size_t>(j)] =
              schedule_step_propagator(spec, stage, kb + j, n, dt);
        }
        for (int j = 0; j < count; ++j) {
          acc = steps[static_cast<std::size_t>(j)] * acc;
          if (opt.record_snapshots) {
            result.snapshots.push_back(
                make_snapshot(acc, ref, stage, (kb + j + 1.0) / n));
          }
        }
      }
    }
  }

  result.total_unitary = acc;
  result.gate_matrix = extract_logical_gate(acc, ref, ref);
  result.leakage = leakage_of(result.gate_matrix);
  result.unitarity_defect = unitarity_defect(acc);
  return result;
}

Operator propagate_hamiltonian_path(
    const std::function<Operator(double)>& h_of_t, double total_time,
    int steps, Execution exec) {
  if (steps < 1 || !(total_time > 0.0)) {
    throw std::invalid_argument("invalid time grid");
  }
  const double dt = total_time / steps;
  Operator acc = Operator::Identity();
  if (exec == Execution::Serial) {
    for (int k = 0; k < steps; ++k) {
      acc = step_propagator(h_of_t((k + 0.5) * dt), dt) * acc;
    }
    return acc;
  }
  constexpr int kBatch = 256;
  std::vector<Operator> parts(
      static_cast<std::size_t>(std::min(kBatch, steps)));
  for (int kb = 0; kb < steps; kb += kBatch) {
    const int count = std::min(kBatch, steps - kb);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < count; ++j) {
      parts[static_cast<std::size_t>(j)] =
          step_propagator(h_of_t((kb + j + 0.5) * dt), dt);
    }
    for (int j = 0; j < count; ++j) {
      acc = parts[static_cast<std::size_t>(j)] * acc;
    }
  }
  return acc;
}

Gate extract_logical_gate(const Operator& u, const Frame& initial,
                          const Frame& final) {
  if (initial.cols() != kLogicalDim || final.cols() != kLogicalDim) {
    throw std::invalid_argument("dimension mismatch");
  }
  return final.adjoint() * (u * initial);
}

double leakage_of(const Gate& m) {
  return std::max(0.0, 1.0 - m.squaredNorm() / kLogicalDim);
}

double alignment_phase(const Gate& m, const Gate& target) {
  const cxd tr = (target.adjoint() * m).trace();
  return std::abs(tr) > 0.0 ? std::arg(tr) : 0.0;
}

double phase_aligned_error(const Gate& m, const Gate& target) {
  const double phi = alignment_phase(m, target);
  return (m * std::exp(cxd(0.0, -phi)) - target).norm();
}

Gate target_gate() {
  Gate g = Gate::Identity();
  g(3, 3) = cxd(-1.0, 0.0);
  return g;
}

std::vector<ScanRow> adiabatic_scan(const ScheduleSpec& spec,
                                    const std::vector<double>& omega_t_list,
                                    int steps_per_stage, Execution exec) {
  if (omega_t_list.empty()) {
    throw std::invalid_argument("scan grid must be nonempty");
  }
  std::vector<ScanRow> rows;
  rows.reserve(omega_t_list.size());
  for (const double omega_t : omega_t_list) {
    const TimeGrid grid{omega_t / spec.omega, steps_per_stage};
    const PropagationResult res =
        propagate(spec, grid, PropagateOptions{exec, false});
    rows.push_back(ScanRow{omega_t, res.leakage,
                           phase_aligned_error(res.gate_matrix, target_gate()),
                           res.gate_matrix});
  }
  return rows;
}

}  // namespace darkgate
