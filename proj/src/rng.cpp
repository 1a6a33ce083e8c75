#include "darkgate/rng.hpp"

#include "darkgate/linalg.hpp"

#include <numbers>

namespace darkgate {

namespace {
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

double random_phase(std::mt19937_64& g) {
  std::uniform_real_distribution<double> dist(-std::numbers::pi,
                                              std::numbers::pi);
  return dist(g);
}

StateVec random_state(std::mt19937_64& g) {
  std::normal_distribution<double> dist(0.0, 1.0);
  StateVec v;
  for (int i = 0; i < kDim; ++i) {
    v(i) = cxd(dist(g), dist(g));
  }
  v /= v.norm();
  return v;
}

ComplexMatrix random_matrix(int k, std::mt19937_64& g) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m(i, j) = cxd(dist(g), dist(g));
    }
  }
  return m;
}

ComplexMatrix random_unitary(int k, std::mt19937_64& g) {
  return polar_unitary(random_matrix(k, g));
}

Frame random_frame(int k, std::mt19937_64& g) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Frame m(kDim, k);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < k; ++j) {
      m(i, j) = cxd(dist(g), dist(g));
    }
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(m);
  return Frame(ComplexMatrix(qr.householderQ()).leftCols(k));
}

MixingAngles random_mixing_angles(std::mt19937_64& g) {
  std::uniform_real_distribution<double> half(0.0, std::numbers::pi / 2.0);
  std::uniform_real_distribution<double> full(0.0, std::numbers::pi);
  return MixingAngles{half(g), full(g)};
}

ParameterPoint random_parameter_point(std::mt19937_64& g) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  while (true) {
    const ParameterPoint p{dist(g), dist(g), dist(g)};
    if (p.in_parameter_space()) {
      return p;
    }
  }
}

}  // namespace darkgate
