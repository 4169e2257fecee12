#pragma once

#include <vector>

#include "atlas/lie_algebra.hpp"

namespace atlas {

/// Spinor model on the exterior algebra of Q^3 (8 monomials indexed by
/// bitmask). Fermionic operators and the vector basis
/// (c1, c2, c3, P, 2c3+, 2c2+, 2c1+) whose Gram matrix under
/// B(v, w) = {v, w}/2 is the anti-diagonal form on Q^7.
struct CliffordModel {
  std::vector<RatMatrix> annihilators;  // c1, c2, c3
  std::vector<RatMatrix> creators;      // c1+, c2+, c3+
  RatMatrix parity;
  std::vector<RatMatrix> vectors;       // seven 8x8 matrices

  /// Vector representation of x (x must normalize the vector span).
  RatMatrix vector_action(const RatMatrix& x) const;
};

CliffordModel clifford_model();

/// spin_7 inside so_8 (anti-diagonal form on the spinor space), with its
/// 7x7 vector representation attached as the B3 factor image.
MatrixLieAlgebra build_spin7_in_so8();

/// Annihilator of the spinor 1 + w1^w2^w3, written in the vector
/// representation: a 14-dimensional subalgebra of so_7.
MatrixLieAlgebra build_g2_in_so7();

/// Weights on Q^7 of a regular torus element of the G2 model.
std::vector<int> g2_regular_weights();

/// sl_3 inside the G2 model: the torus and the long root spaces.
MatrixLieAlgebra build_sl3_in_g2();

/// Representatives of the G2 orbits in the model, keyed by label.
RatMatrix g2_representative(const std::string& label);

/// Change of basis on the spinor space bringing the invariant form to the
/// anti-diagonal one; columns are the new basis in monomial coordinates.
const RatMatrix& spinor_frame();

}  // namespace atlas
