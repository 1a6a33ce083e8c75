#include "darkgate/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace darkgate {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMinSegmentRank = 0.1;
}  // namespace

int FiberPath::width() const {
  return fibers.empty() ? 0 : static_cast<int>(fibers.front().cols());
}

void FiberPath::validate() const {
  if (fibers.size() < 2 || fibers.size() != s.size()) {
    throw std::invalid_argument("path needs at least two samples");
  }
  const int k = width();
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (fibers[i].cols() != k) {
      throw std::invalid_argument("dimension mismatch");
    }
    if (i > 0 && !(s[i] > s[i - 1])) {
      throw std::invalid_argument("path parameter must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i + 1 < fibers.size(); ++i) {
    const ComplexMatrix ov = overlap_matrix(fibers[i], fibers[i + 1]);
    double smallest = 0.0;
    if (k == 1) {
      smallest = std::abs(ov(0, 0));
    } else {
      Eigen::JacobiSVD<ComplexMatrix> svd(ov);
      smallest = svd.singularValues()(k - 1);
    }
    if (smallest < kMinSegmentRank) {
      throw std::runtime_error("path too coarse");
    }
  }
}

FiberPath sample_fiber_path(const ScheduleSpec& spec, FiberKind kind,
                            int samples_per_stage, Execution exec) {
  spec.validate();
  if (samples_per_stage < 3) {
    throw std::invalid_argument("samples_per_stage must be >= 3");
  }
  const int m = samples_per_stage;
  const int total = 2 * m - 1;  // stage boundary sample stored once
  FiberPath path;
  path.s.resize(static_cast<std::size_t>(total));
  path.fibers.resize(static_cast<std::size_t>(total));

  const auto fill = [&](int i) {
    const int stage = i < m ? 1 : 2;
    const int j = i < m ? i : i - (m - 1);
    const double s_stage = static_cast<double>(j) / (m - 1);
    const DarkFrame df =
        dark_frame(mixing_angles(schedule_sample(spec, stage, s_stage)));
    const std::size_t idx = static_cast<std::size_t>(i);
    path.s[idx] = 0.5 * (stage - 1) + 0.5 * s_stage;
    switch (kind) {
      case FiberKind::L3:
        path.fibers[idx] = df.l3;
        break;
      case FiberKind::L4:
        path.fibers[idx] = df.l4;
        break;
      case FiberKind::Full:
        path.fibers[idx] = df.as_frame();
        break;
    }
  };

  if (exec == Execution::Serial) {
    for (int i = 0; i < total; ++i) {
      fill(i);
    }
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < total; ++i) {
      fill(i);
    }
  }
  return path;
}

TransportedState parallel_transport(const FiberPath& path) {
  path.validate();
  if (path.width() != 1) {
    throw std::invalid_argument("dimension mismatch");
  }
  TransportedState out;
  out.representatives.resize(path.size());
  out.representatives[0] = path.fibers[0].col(0);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const StateVec next = path.fibers[k + 1].col(0);
    // <u_{k+1}|psi_k>; aligning by its phase makes <psi_k|psi_{k+1}>
    // real positive, the discrete parallel condition.
    const cxd ov = next.dot(out.representatives[k]);
    if (std::abs(ov) == 0.0) {
      throw std::runtime_error("path too coarse");
    }
    out.representatives[k + 1] = next * (ov / std::abs(ov));
  }
  return out;
}

Frame most_parallel_endpoint(const Frame& initial, const Frame& final) {
  return final * polar_unitary(overlap_matrix(final, initial));
}

double noncyclic_phase(const FiberPath& path) {
  const TransportedState transported = parallel_transport(path);
  const Frame fixed =
      most_parallel_endpoint(path.fibers.front(), path.fibers.back());
  const cxd ov = fixed.col(0).dot(transported.final_representative());
  return wrap_phase(std::arg(ov));
}

ComplexMatrix transport_chain(const FiberPath& path, Execution exec) {
  path.validate();
  const int k = path.width();
  const std::size_t segments = path.size() - 1;
  ComplexMatrix acc = ComplexMatrix::Identity(k, k);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < segments; ++i) {
      acc = polar_unitary(overlap_matrix(path.fibers[i + 1], path.fibers[i])) *
            acc;
    }
    return acc;
  }
  std::vector<ComplexMatrix> factors(segments);
  bool degenerate = false;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(segments); ++i) {
    try {
      const std::size_t idx = static_cast<std::size_t>(i);
      factors[idx] =
          polar_unitary(overlap_matrix(path.fibers[idx + 1], path.fibers[idx]));
    } catch (const std::exception&) {
#pragma omp atomic write
      degenerate = true;
    }
  }
  if (degenerate) {
    throw std::runtime_error("degenerate overlap");
  }
  for (std::size_t i = 0; i < segments; ++i) {
    acc = factors[i] * acc;
  }
  return acc;
}

Gate wilson_line(const FiberPath& path, Execution exec) {
  if (path.width() != kLogicalDim) {
    throw std::invalid_argument("dimension mismatch");
  }
  const ComplexMatrix chain = transport_chain(path, exec);
  // Endpoint gauge fixing expresses the holonomy in the initial basis.
  const ComplexMatrix endpoint =
      polar_unitary(overlap_matrix(path.fibers.front(), path.fibers.back()));
  return Gate(endpoint * chain);
}

BlochPath bloch_path(const FiberPath& path) {
  if (path.width() != 1) {
    throw std::invalid_argument("dimension mismatch");
  }
  BlochPath out;
  out.s = path.s;
  out.points.resize(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const StateVec v = path.fibers[i].col(0);
    double off_span = 0.0;
    for (int j = 0; j < kDim; ++j) {
      if (j != kIdxE1G2pQ0 && j != kIdxG1E2pQ0) {
        off_span += std::norm(v(j));
      }
    }
    if (std::sqrt(off_span) > 1e-12) {
      throw std::runtime_error("fiber outside the span");
    }
    const cxd a = v(kIdxE1G2pQ0);
    const cxd b = v(kIdxG1E2pQ0);
    const cxd cross = std::conj(a) * b;
    out.points[i] =
        Vec3(2.0 * cross.real(), 2.0 * cross.imag(),
             std::norm(a) - std::norm(b));
  }
  return out;
}

double solid_angle(const BlochPath& path, bool closed) {
  const auto& pts = path.points;
  for (const Vec3& p : pts) {
    if (std::abs(p.norm() - 1.0) > 1e-12) {
      throw std::invalid_argument("non-unit points");
    }
  }
  if (pts.size() < 3) {
    return 0.0;
  }

  std::vector<Vec3> loop = pts;
  const double gap = (pts.front() - pts.back()).norm();
  const double antipodal_gap = (pts.front() + pts.back()).norm();
  if (gap > 1e-9 && antipodal_gap <= 1e-9) {
    if (!closed) {
      throw std::runtime_error("ambiguous closure");
    }
    // Projective double-cover closure: continue along the antipodal image,
    // which starts where the path ended and returns to the start.
    loop.reserve(2 * pts.size());
    for (const Vec3& p : pts) {
      loop.push_back(-p);
    }
  }
  const std::size_t n = loop.size();

  // Fan apex at the pole of the loop's area vector. The loop of interest
  // is a great circle through its own first point, where a first-point fan
  // degenerates (every triangle coplanar with the center); any apex gives
  // the same answer modulo 4*pi for a closed loop, and the pole keeps each
  // triangle well conditioned.
  Vec3 area_vec = Vec3::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    area_vec += loop[i].cross(loop[(i + 1) % n]);
  }
  const Vec3 apex =
      area_vec.norm() >= 1e-9 ? Vec3(area_vec.normalized()) : loop.front();

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = loop[i];
    const Vec3& b = loop[(i + 1) % n];
    const double num = apex.dot(a.cross(b));
    const double den = 1.0 + apex.dot(a) + a.dot(b) + b.dot(apex);
    total += 2.0 * std::atan2(num, den);
  }

  double r = std::remainder(total, 4.0 * kPi);  // lands in [-2 pi, 2 pi]
  if (r <= -2.0 * kPi) {
    r += 4.0 * kPi;
  }
  return r;
}

std::vector<double> grassmann_closure(const FiberPath& path) {
  path.validate();
  return principal_angles(path.fibers.front(), path.fibers.back());
}

HolonomyReport holonomy_report(const ScheduleSpec& spec, int samples_per_stage,
                               Execution exec) {
  const FiberPath path_l3 =
      sample_fiber_path(spec, FiberKind::L3, samples_per_stage, exec);
  const FiberPath path_l4 =
      sample_fiber_path(spec, FiberKind::L4, samples_per_stage, exec);
  const FiberPath path_full =
      sample_fiber_path(spec, FiberKind::Full, samples_per_stage, exec);

  HolonomyReport report;
  report.beta_l3 = noncyclic_phase(path_l3);
  report.beta_l4 = noncyclic_phase(path_l4);
  report.wilson = wilson_line(path_full, exec);
  report.solid_angle = solid_angle(bloch_path(path_l4), /*closed=*/true);
  report.closure_angles = grassmann_closure(path_full);
  return report;
}

}  // namespace darkgate
