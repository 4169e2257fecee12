#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlas/linalg.hpp"
#include "atlas/orbits.hpp"

namespace atlas {

/// One simple ideal of a (semi)simple matrix algebra.
struct SimpleFactor {
  LieType type;
  std::vector<Index> basis_indices;
  /// Image of every basis element of the whole algebra in the factor's
  /// defining representation. Empty when the algebra's own matrices serve.
  std::vector<RatMatrix> rep;
};

class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra() = default;
  MatrixLieAlgebra(std::string name, std::vector<RatMatrix> basis, RatMatrix form,
                   std::vector<SimpleFactor> factors);

  const std::string& name() const { return name_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  Index ambient_dim() const { return basis_.empty() ? 0 : basis_.front().rows(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  /// Invariant form on the defining space; empty for sl.
  const RatMatrix& form() const { return form_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  /// Gram matrix of (x, y) -> trace(xy) on the basis.
  const RatMatrix& trace_form_gram() const;

  RatMatrix element(const RatVector& coords) const;
  std::optional<RatVector> coordinates(const RatMatrix& x) const;
  /// Throws NotInSpan.
  RatVector coords(const RatMatrix& x) const;
  bool contains(const RatMatrix& x) const { return coordinates(x).has_value(); }

  RatVector bracket(const RatVector& x, const RatVector& y) const;
  /// Matrix of y -> [x, y] in basis coordinates; x must lie in the algebra.
  RatMatrix ad(const RatMatrix& x) const;

  /// dim of {y in this algebra : [y, x] = 0}; x may be any ambient matrix.
  Index centralizer_dim(const RatMatrix& x) const;
  std::vector<RatMatrix> centralizer(const RatMatrix& x) const;
  /// Same, restricted to the span of a subset of basis elements.
  Index centralizer_dim(const RatMatrix& x, const std::vector<Index>& subset) const;

  /// Image of x in the defining representation of factor i.
  RatMatrix rep_image(std::size_t factor, const RatMatrix& x) const;

 private:
  std::string name_;
  std::vector<RatMatrix> basis_;
  RatMatrix form_;
  std::vector<SimpleFactor> factors_;
  // Entry positions (column-major) on which the basis is independent, and the
  // inverse of the basis restricted to them.
  std::vector<Index> pivot_positions_;
  RatMatrix pivot_inverse_;
  mutable std::optional<RatMatrix> gram_;
};

struct Sl2Triple {
  RatMatrix e, h, f;
};

/// Two linear solves: f0 with [[e, f0], e] = 2e gives h = [e, f0]; then f
/// with [e, f] = h and [h, f] = -2f. Throws NotNilpotent.
Sl2Triple complete_sl2(const MatrixLieAlgebra& g, const RatMatrix& e);

/// Integer eigenvalues of ad(h) on the algebra, with multiplicity, descending.
/// Throws Unsupported if ad(h) is not diagonalizable over the integers.
std::vector<int> ad_eigenvalues(const MatrixLieAlgebra& g, const RatMatrix& h);

struct ElementOrbitWitness {
  RatMatrix element;
  Index centralizer_dim = 0;
  std::optional<JordanType> jordan_type_defining;
  /// One orbit per simple factor.
  std::vector<OrbitId> orbits;

  std::string to_string() const;
  /// Sum of orbit dimensions over the factors.
  int orbit_dim() const;
};

/// Classical factors: Jordan type in the defining representation (very even
/// D types come back tagged Undetermined). G2 and factors without a defining
/// image: centralizer dimension inside the factor.
ElementOrbitWitness identify_orbit(const MatrixLieAlgebra& g, const RatMatrix& x);

OrbitId identify_in_factor(const MatrixLieAlgebra& g, std::size_t factor, const RatMatrix& x);

/// Dimension, height and pi_1 (simply connected form) of an orbit label.
int orbit_id_dimension(const OrbitId& o);
int orbit_id_height(const OrbitId& o);
int orbit_id_pi1(const OrbitId& o);

/// Smallest subalgebra containing the given matrices, as an independent basis.
std::vector<RatMatrix> lie_closure(const std::vector<RatMatrix>& generators);

/// Independent subset spanning the same space as mats.
std::vector<RatMatrix> independent_span(const std::vector<RatMatrix>& mats);

/// Largest k with (ad x)^k != 0 on g.
int matrix_height(const MatrixLieAlgebra& g, const RatMatrix& x);

}  // namespace atlas
