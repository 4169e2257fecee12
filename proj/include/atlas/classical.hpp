#pragma once

#include <functional>
#include <vector>

#include "atlas/lie_algebra.hpp"

namespace atlas {

/// Anti-diagonal form on Q^N: symmetric with all entries 1, or symplectic
/// with +1 in the first N/2 rows and -1 below.
RatMatrix antidiagonal_form(int N, bool symplectic);

/// sl_N, so_N or sp_N in the defining representation. so/sp use the
/// anti-diagonal form, so upper triangular matrices form a Borel subalgebra.
MatrixLieAlgebra build_classical(const LieType& t, int rank_bound = kDefaultRankBound);

/// so_N or sp_N for any size N (so_2 and so_4 included), single factor typed t.
MatrixLieAlgebra build_form_algebra(int N, bool symplectic, const LieType& t);

/// A nilpotent matrix of Jordan type p in the model of build_classical.
/// Very even partitions honour the I/II tag via the diagonal characteristic.
RatMatrix standard_representative(const LieType& t, const Partition& p);

/// Diagonal characteristic of standard_representative(t, p).
RatMatrix standard_characteristic(const LieType& t, const Partition& p);

/// Tag of a very even element whose diagonal characteristic is given:
/// an odd number of negative entries among the first n means I.
VeryEvenTag very_even_tag_from_characteristic(const RatMatrix& h);

/// Tag of a very even nilpotent in so_2n (anti-diagonal form). Uses the
/// maximal isotropic subspace where the characteristic is positive and
/// compares its family with span(e_1..e_n).
VeryEvenTag very_even_tag(const RatMatrix& x);

/// g intersected with span{E_ij : keep(w_i - w_j)}.
std::vector<RatMatrix> weight_subspace(const MatrixLieAlgebra& g, const std::vector<int>& w,
                                       const std::function<bool(int)>& keep);

/// g intersected with span{E_ij : sign * (w_i - w_j) > 0}.
std::vector<RatMatrix> weight_graded_part(const MatrixLieAlgebra& g, const std::vector<int>& w, int sign);

/// Weights N-1, N-3, ... making the strictly upper triangular part positive.
std::vector<int> regular_weights(int N);

}  // namespace atlas
