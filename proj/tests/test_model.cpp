#include "darkgate/linalg.hpp"
#include "darkgate/model.hpp"
#include "darkgate/rng.hpp"
#include "darkgate/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace darkgate;

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::Matrix3cd bright3_block(const Operator& h) {
  Eigen::Matrix3cd block;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      block(i, j) = h(kBlockBright3[static_cast<std::size_t>(i)],
                      kBlockBright3[static_cast<std::size_t>(j)]);
    }
  }
  return block;
}
}  // namespace

TEST_CASE("parameter space membership") {
  CHECK((ParameterPoint{1.0, 1.0, 1.0}.in_parameter_space()));
  CHECK((ParameterPoint{0.0, 1.0, 1.0}.in_parameter_space()));
  CHECK_FALSE((ParameterPoint{0.0, 0.0, 1.0}.in_parameter_space()));
  CHECK_FALSE((ParameterPoint{0.0, 1.0, 0.0}.in_parameter_space()));
  CHECK_THROWS_WITH_AS((hamiltonian(ParameterPoint{0.0, 0.0, 1.0})),
                       "outside parameter space", std::invalid_argument);
  CHECK_THROWS_AS((mixing_angles(ParameterPoint{0.0, 1.0, 0.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS((spectral_gap(ParameterPoint{0.0, 0.0, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("hamiltonian annihilates the decoupled excited ket at lambda1 = 0") {
  const Operator h = hamiltonian(ParameterPoint{0.0, 1.0, 1.0});
  const StateVec e1g20 = make_basis_state(Sys1::e1, Sys2::g2, Qubit::q0);
  CHECK((h * e1g20).norm() == 0.0);
}

TEST_CASE("hamiltonian annihilates l3(pi/4) at equal couplings") {
  const Operator h = hamiltonian(ParameterPoint{1.0, 1.0, 1.0});
  const StateVec l3 = dark_frame(MixingAngles{kPi / 4.0, 0.0}).l3;
  CHECK((h * l3).norm() <= 1e-16);
}

TEST_CASE("bright block eigenvalues are 0 and +-sqrt(2) at (1,1,0)") {
  // Hand-diagonalized oracle for [[0,0,1],[0,0,-1],[1,-1,0]]:
  // eigenvalues 0 and +-sqrt(lambda1^2 + lambda2^2).
  const Operator h = hamiltonian(ParameterPoint{1.0, 1.0, 0.0});
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(bright3_block(h));
  CHECK(std::abs(es.eigenvalues()(0) + std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(es.eigenvalues()(1)) <= 1e-12);
  CHECK(std::abs(es.eigenvalues()(2) - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("hamiltonian is hermitian with zero spectator rows") {
  for (int i = 0; i < 50; ++i) {
    auto g = rng_for(23, static_cast<std::uint64_t>(i));
    const Operator h = hamiltonian(random_parameter_point(g));
    CHECK(hermiticity_defect(h) == 0.0);
    for (int row = 0; row < kDim; ++row) {
      const Sys1 s1 = basis_label(row).sys1;
      if (s1 == Sys1::e1p || s1 == Sys1::g1p) {
        CHECK(h.row(row).cwiseAbs().maxCoeff() == 0.0);
        CHECK(h.col(row).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("mixing angles at the schedule corner points") {
  const MixingAngles start = mixing_angles(ParameterPoint{0.0, 1.0, 1.0});
  CHECK(start.theta == 0.0);
  CHECK(start.theta_prime == 0.0);

  const MixingAngles mid = mixing_angles(ParameterPoint{1.0, 0.0, 0.0});
  CHECK(mid.theta == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(mid.theta_prime == doctest::Approx(kPi / 2.0).epsilon(1e-15));

  const MixingAngles end = mixing_angles(ParameterPoint{0.0, 1.0, -1.0});
  CHECK(end.theta == 0.0);
  CHECK(end.theta_prime == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("schedule samples hit the stated endpoints") {
  const ScheduleSpec spec{1.0, 201};
  const ParameterPoint a = schedule_sample(spec, 1, 0.0);
  CHECK(a.lambda1 == 0.0);
  CHECK(a.lambda2 == 1.0);
  CHECK(a.lambda3 == 1.0);

  const ParameterPoint b = schedule_sample(spec, 1, 1.0);
  CHECK(b.lambda1 == 1.0);
  CHECK(std::abs(b.lambda2) <= 1e-15);
  CHECK(std::abs(b.lambda3) <= 1e-15);

  const ParameterPoint c = schedule_sample(spec, 2, 1.0);
  CHECK(std::abs(c.lambda1) <= 1e-15);
  CHECK(c.lambda2 == 1.0);
  CHECK(c.lambda3 == -1.0);

  CHECK_THROWS_WITH_AS(schedule_sample(spec, 1, 1.5), "s out of range",
                       std::invalid_argument);
  CHECK_THROWS_AS(schedule_sample(spec, 3, 0.5), std::invalid_argument);
}

TEST_CASE("schedule round trip reproduces the target angles") {
  const ScheduleSpec spec{1.7, 201};
  for (int stage = 1; stage <= 2; ++stage) {
    for (int i = 0; i < 100; ++i) {
      auto g = rng_for(29, static_cast<std::uint64_t>(100 * stage + i));
      std::uniform_real_distribution<double> dist(0.0, 1.0);
      const double s = dist(g);
      const ParameterPoint p = schedule_sample(spec, stage, s);
      CHECK(p.in_parameter_space());
      const MixingAngles got = mixing_angles(p);
      const MixingAngles want = schedule_target_angles(stage, s);
      CHECK(std::abs(got.theta - want.theta) <= 1e-12);
      CHECK(std::abs(got.theta_prime - want.theta_prime) <= 1e-12);
    }
  }
}

TEST_CASE("dark frame closed forms at the corner angles") {
  const DarkFrame at00 = dark_frame(MixingAngles{0.0, 0.0});
  CHECK((at00.l1 - make_basis_state(Sys1::g1, Sys2::g2, Qubit::q0)).norm() ==
        0.0);
  CHECK((at00.l2 - make_basis_state(Sys1::g1, Sys2::g2p, Qubit::q0)).norm() ==
        0.0);
  CHECK((at00.l3 - make_basis_state(Sys1::e1, Sys2::g2, Qubit::q0)).norm() ==
        0.0);
  CHECK((at00.l4 - make_basis_state(Sys1::e1, Sys2::g2p, Qubit::q0)).norm() ==
        0.0);

  const DarkFrame mid = dark_frame(MixingAngles{kPi / 2.0, kPi / 2.0});
  CHECK((mid.l3 - make_basis_state(Sys1::g1, Sys2::e2, Qubit::q0)).norm() <=
        1e-15);
  CHECK((mid.l4 - make_basis_state(Sys1::g1, Sys2::e2p, Qubit::q0)).norm() <=
        1e-15);

  // cos(pi) = -1: the sign that becomes the conditional phase.
  const DarkFrame end = dark_frame(MixingAngles{0.0, kPi});
  CHECK((end.l4 + make_basis_state(Sys1::e1, Sys2::g2p, Qubit::q0)).norm() <=
        1e-15);
}

TEST_CASE("dark frame annihilation over random angles") {
  CHECK(max_dark_annihilation_residual(31, 1000) <= 1e-12);
  CHECK(max_dark_matrix_element(31, 1000) <= 1e-13);
}

TEST_CASE("dark frames are orthonormal") {
  for (int i = 0; i < 100; ++i) {
    auto g = rng_for(37, static_cast<std::uint64_t>(i));
    CHECK(gram_defect(dark_frame(random_mixing_angles(g)).as_frame()) <=
          1e-12);
  }
}

TEST_CASE("spectral gap") {
  CHECK((spectral_gap(ParameterPoint{0.0, 1.0, 1.0})) == 1.0);
  CHECK((spectral_gap(ParameterPoint{1.0, 0.0, 0.0})) == 1.0);

  const ScheduleSpec spec{2.5, 201};
  for (int stage = 1; stage <= 2; ++stage) {
    for (int i = 0; i <= 200; ++i) {
      const double s = i / 200.0;
      CHECK(std::abs(spectral_gap(schedule_sample(spec, stage, s)) - 2.5) <=
            1e-12);
    }
  }
}

TEST_CASE("block residual vanishes identically") {
  CHECK((block_residual(ParameterPoint{1.0, 1.0, 1.0})) <= 1e-14);
  CHECK((block_residual(ParameterPoint{0.3, 2.0, -0.7})) <= 1e-14);
  CHECK(max_block_residual_random(41, 100) <= 1e-14);
}

TEST_CASE("parameters_for_angles reconstructs the angles") {
  for (int i = 0; i < 200; ++i) {
    auto g = rng_for(43, static_cast<std::uint64_t>(i));
    const MixingAngles want = random_mixing_angles(g);
    const MixingAngles got = mixing_angles(parameters_for_angles(want));
    CHECK(std::abs(got.theta - want.theta) <= 1e-12);
    CHECK(std::abs(got.theta_prime - want.theta_prime) <= 1e-12);
  }
}

TEST_CASE("schedule spec validation") {
  CHECK_THROWS_AS((ScheduleSpec{-1.0, 201}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ScheduleSpec{0.0, 201}.validate()), std::invalid_argument);
  CHECK_NOTHROW((ScheduleSpec{0.0, 201, true}.validate()));
  CHECK_THROWS_AS((ScheduleSpec{1.0, 2}).validate(), std::invalid_argument);
}
