#pragma once

#include "darkgate/types.hpp"

namespace darkgate {

// Level labels. Rank order within each subsystem is fixed so that the
// flattened index is stable across platforms and test vectors:
//   index = 8 * sys1 + 2 * sys2 + qubit.
enum class Sys1 : int { e1 = 0, e1p = 1, g1 = 2, g1p = 3 };
enum class Sys2 : int { e2 = 0, e2p = 1, g2 = 2, g2p = 3 };
enum class Qubit : int { q0 = 0, q1 = 1 };

struct BasisLabel {
  Sys1 sys1;
  Sys2 sys2;
  Qubit qubit;
};

constexpr int basis_index(Sys1 a, Sys2 b, Qubit q) {
  return 8 * static_cast<int>(a) + 2 * static_cast<int>(b) +
         static_cast<int>(q);
}

constexpr int basis_index(const BasisLabel& label) {
  return basis_index(label.sys1, label.sys2, label.qubit);
}

constexpr BasisLabel basis_label(int index) {
  return BasisLabel{static_cast<Sys1>((index / 8) % 4),
                    static_cast<Sys2>((index / 2) % 4),
                    static_cast<Qubit>(index % 2)};
}

// Unit vector with amplitude 1 at the flattened index.
StateVec make_basis_state(const BasisLabel& label);
StateVec make_basis_state(Sys1 a, Sys2 b, Qubit q);

// Indices that appear throughout the model.
inline constexpr int kIdxE1G2Q0 = basis_index(Sys1::e1, Sys2::g2, Qubit::q0);
inline constexpr int kIdxE1G2pQ0 = basis_index(Sys1::e1, Sys2::g2p, Qubit::q0);
inline constexpr int kIdxG1E2Q0 = basis_index(Sys1::g1, Sys2::e2, Qubit::q0);
inline constexpr int kIdxG1E2pQ0 = basis_index(Sys1::g1, Sys2::e2p, Qubit::q0);
inline constexpr int kIdxG1G2Q0 = basis_index(Sys1::g1, Sys2::g2, Qubit::q0);
inline constexpr int kIdxG1G2pQ0 = basis_index(Sys1::g1, Sys2::g2p, Qubit::q0);
inline constexpr int kIdxG1G2Q1 = basis_index(Sys1::g1, Sys2::g2, Qubit::q1);
inline constexpr int kIdxG1G2pQ1 = basis_index(Sys1::g1, Sys2::g2p, Qubit::q1);

}  // namespace darkgate
