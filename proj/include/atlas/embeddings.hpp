#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlas/lie_algebra.hpp"

namespace atlas {

struct SatakeDiagram {
  std::vector<bool> white;  // per node, Bourbaki order
  std::vector<std::pair<int, int>> arrows;
};

enum class Conjugator { Cayley, Exponential };

enum class P1Route { P2Certificate, Satake, Chain, DataOnly };

std::string to_string(P1Route route);

struct EmbeddingCase {
  std::string id;         // "T1.row3(4)"
  std::string golden_id;  // "T1.3"; empty for controls
  std::vector<int> params;
  std::string description;
  LieType ambient_type;
  std::vector<LieType> sub_types;

  bool data_only = false;
  bool negative_control = false;
  P1Route route = P1Route::P2Certificate;

  std::optional<MatrixLieAlgebra> ambient;
  std::optional<MatrixLieAlgebra> sub;
  std::vector<RatMatrix> complement;
  /// Basis of h followed by the basis of m, for projections.
  std::optional<MatrixLieAlgebra> split;
  bool symmetric = false;
  std::optional<SatakeDiagram> satake;

  /// Nilradicals of a Borel subalgebra of the ambient algebra.
  std::vector<RatMatrix> n_plus, n_minus;
  Conjugator conjugator = Conjugator::Cayley;

  /// The good orbit the case is about; defaults to the minimal orbit.
  OrbitId default_orbit;

  Index dim_h() const;
  Index dim_m() const;
  /// Sum of the ranks of the simple factors of h.
  int rank_h() const;
};

struct Projection {
  RatMatrix a;  // component in h
  RatMatrix b;  // component in m
};

Projection project(const EmbeddingCase& c, const RatMatrix& x);

/// +1 on h, -1 on m, as a matrix on ambient coordinates.
RatMatrix involution_matrix(const EmbeddingCase& c);

/// True iff the orbit meets the (-1)-eigenspace: every nonzero label of its
/// weighted Dynkin diagram sits on a white node, and the labels are
/// invariant under the arrows. Throws NoSatakeData.
bool satake_meets_criterion(const EmbeddingCase& c, const Partition& o);

/// Nonzero ambient orbits whose closure meets the (-1)-eigenspace only in 0.
std::vector<Partition> good_orbits_via_satake(const EmbeddingCase& c);

/// Builds a registered case. Ids: T1.row1, T1.row2, T1.row3, T1.row4,
/// T1.row4-spin, T1.row5, T1.row6, T1.row7, T1.row8, T1.row9, T1.row10,
/// T1.row11, T2.i, T2.ii, NEG.so7-in-so9-standard. A parameterized id may
/// carry its parameters inline, as in "T1.row3(4)" or "T2.i(2,1)".
EmbeddingCase make_case(const std::string& id, const std::vector<int>& params = {});

/// Splits "T1.row3(4)" into ("T1.row3", {4}).
std::pair<std::string, std::vector<int>> parse_case_id(const std::string& id);

std::vector<std::string> case_names();

/// The parameter choices exercised when regenerating the tables.
std::vector<std::pair<std::string, std::vector<int>>> default_instances();

/// Standard so_{2n} inside so_{2n+1}: the middle coordinate is dropped.
RatMatrix embed_even_in_odd(const RatMatrix& x);
/// Standard so_{2n+1} inside so_{2n+2}.
RatMatrix embed_odd_in_even(const RatMatrix& x);

}  // namespace atlas
