#include "darkgate/model.hpp"

#include "darkgate/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace darkgate {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool ParameterPoint::in_parameter_space() const {
  return std::hypot(lambda1, lambda2) > 0.0 &&
         std::hypot(lambda1, lambda3) > 0.0;
}

void ScheduleSpec::validate() const {
  if (omega < 0.0 || (omega == 0.0 && !allow_zero_amplitude)) {
    throw std::invalid_argument("omega must be > 0");
  }
  if (samples_per_stage < 3) {
    throw std::invalid_argument("samples_per_stage must be >= 3");
  }
}

Frame DarkFrame::as_frame() const {
  Frame f(kDim, kLogicalDim);
  f.col(0) = l1;
  f.col(1) = l2;
  f.col(2) = l3;
  f.col(3) = l4;
  return f;
}

const StateVec& DarkFrame::column(int i) const {
  switch (i) {
    case 0: return l1;
    case 1: return l2;
    case 2: return l3;
    default: return l4;
  }
}

Operator build_hamiltonian(double lambda1, double lambda2, double lambda3) {
  Operator h = Operator::Zero();
  const auto couple = [&h](int row, int col, double amp) {
    h(row, col) += cxd(amp, 0.0);
    h(col, row) += cxd(amp, 0.0);
  };
  // lambda1 |e1 0><g1 1|, identity over all four sys2 levels.
  for (int x2 = 0; x2 < 4; ++x2) {
    const auto s2 = static_cast<Sys2>(x2);
    couple(basis_index(Sys1::e1, s2, Qubit::q0),
           basis_index(Sys1::g1, s2, Qubit::q1), lambda1);
  }
  // -lambda2 |e2 0><g2 1| and -lambda3 |e'2 0><g'2 1| over the two
  // populated sys1 levels; e1', g1' rows stay identically zero.
  for (const Sys1 s1 : {Sys1::e1, Sys1::g1}) {
    couple(basis_index(s1, Sys2::e2, Qubit::q0),
           basis_index(s1, Sys2::g2, Qubit::q1), -lambda2);
    couple(basis_index(s1, Sys2::e2p, Qubit::q0),
           basis_index(s1, Sys2::g2p, Qubit::q1), -lambda3);
  }
  return h;
}

Operator hamiltonian(const ParameterPoint& p) {
  if (!p.in_parameter_space()) {
    throw std::invalid_argument("outside parameter space");
  }
  return build_hamiltonian(p.lambda1, p.lambda2, p.lambda3);
}

MixingAngles mixing_angles(const ParameterPoint& p) {
  if (!p.in_parameter_space()) {
    throw std::invalid_argument("outside parameter space");
  }
  // atan2(|l1|, l2) == arccos(l2 / sqrt(l1^2 + l2^2)) on [0, pi], but stays
  // well conditioned near the interval ends.
  return MixingAngles{std::atan2(std::abs(p.lambda1), p.lambda2),
                      std::atan2(std::abs(p.lambda1), p.lambda3)};
}

ParameterPoint schedule_sample(const ScheduleSpec& spec, int stage, double s) {
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("s out of range");
  }
  if (stage != 1 && stage != 2) {
    throw std::invalid_argument("stage must be 1 or 2");
  }
  const double c = std::cos(s * kPi / 2.0);
  const double n = std::sin(s * kPi / 2.0);
  if (stage == 1) {
    return ParameterPoint{spec.omega * n, spec.omega * c, spec.omega * c};
  }
  return ParameterPoint{spec.omega * c, spec.omega * n, -spec.omega * n};
}

MixingAngles schedule_target_angles(int stage, double s) {
  if (stage == 1) {
    return MixingAngles{s * kPi / 2.0, s * kPi / 2.0};
  }
  return MixingAngles{(1.0 - s) * kPi / 2.0, (1.0 + s) * kPi / 2.0};
}

DarkFrame dark_frame(const MixingAngles& a) {
  DarkFrame f;
  f.l1 = make_basis_state(Sys1::g1, Sys2::g2, Qubit::q0);
  f.l2 = make_basis_state(Sys1::g1, Sys2::g2p, Qubit::q0);
  f.l3 = StateVec::Zero();
  f.l3(kIdxE1G2Q0) = cxd(std::cos(a.theta), 0.0);
  f.l3(kIdxG1E2Q0) = cxd(std::sin(a.theta), 0.0);
  f.l4 = StateVec::Zero();
  f.l4(kIdxE1G2pQ0) = cxd(std::cos(a.theta_prime), 0.0);
  f.l4(kIdxG1E2pQ0) = cxd(std::sin(a.theta_prime), 0.0);
  return f;
}

double spectral_gap(const ParameterPoint& p) {
  if (!p.in_parameter_space()) {
    throw std::invalid_argument("outside parameter space");
  }
  return std::min(std::hypot(p.lambda1, p.lambda2),
                  std::hypot(p.lambda1, p.lambda3));
}

int block_id(int basis_index) {
  for (std::size_t i = 0; i < kBlockL1.size(); ++i) {
    if (kBlockL1[i] == basis_index) return 0;
  }
  for (std::size_t i = 0; i < kBlockL2.size(); ++i) {
    if (kBlockL2[i] == basis_index) return 1;
  }
  for (std::size_t i = 0; i < kBlockBright3.size(); ++i) {
    if (kBlockBright3[i] == basis_index) return 2;
  }
  for (std::size_t i = 0; i < kBlockBright4.size(); ++i) {
    if (kBlockBright4[i] == basis_index) return 3;
  }
  return 4;
}

double block_residual(const ParameterPoint& p) {
  const Operator h = build_hamiltonian(p.lambda1, p.lambda2, p.lambda3);
  double residual = 0.0;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (block_id(i) != block_id(j)) {
        residual = std::max(residual, std::abs(h(i, j)));
      }
    }
  }
  return residual;
}

ParameterPoint parameters_for_angles(const MixingAngles& a, double omega) {
  const double st = std::sin(a.theta);
  const double ct = std::cos(a.theta);
  const double sp = std::sin(a.theta_prime);
  const double cp = std::cos(a.theta_prime);
  const ParameterPoint p{omega * st * sp, omega * ct * sp, omega * st * cp};
  if (!p.in_parameter_space()) {
    throw std::invalid_argument("outside parameter space");
  }
  return p;
}

}  // namespace darkgate
