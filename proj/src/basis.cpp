#include "darkgate/basis.hpp"

namespace darkgate {

StateVec make_basis_state(const BasisLabel& label) {
  StateVec v = StateVec::Zero();
  v(basis_index(label)) = cxd(1.0, 0.0);
  return v;
}

StateVec make_basis_state(Sys1 a, Sys2 b, Qubit q) {
  return make_basis_state(BasisLabel{a, b, q});
}

}  // namespace darkgate
