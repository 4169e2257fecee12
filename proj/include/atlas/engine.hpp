#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atlas/embeddings.hpp"
#include "atlas/exceptional.hpp"

namespace atlas {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Recorded for the reader; does not affect the verdict.
  bool informational = false;
};

struct P2Witness {
  RatMatrix element;
  int sample = 0;  // 1-based index of the successful sample
  int samples_tried = 0;
  Index achieved_dim = 0;
};

struct CommutativePlane {
  RatMatrix a, b;
  /// (c1, c2, ambient orbit of c1 a + c2 b)
  std::vector<std::tuple<int, int, std::string>> census;
  std::vector<std::string> distinct;
  bool ad_cube_zero = true;
};

struct VerificationReport {
  std::string case_id;
  std::string description;
  OrbitId orbit;
  P1Route route = P1Route::P2Certificate;
  bool negative_control = false;
  int dim_m = 0, dim_orbit = 0;
  std::optional<P2Witness> witness;
  Index best_dim = 0;  // largest dim [h, x] seen while sampling
  std::optional<ElementOrbitWitness> phi;  // H-orbit of a
  std::optional<OrbitId> b_orbit;          // ambient orbit of b
  std::optional<OrbitId> a_orbit;          // ambient orbit of a (tilde O)
  std::string phi_orbit, tilde_o;
  std::optional<int> dim_tilde_o, deg_phi;
  std::optional<int> height_phi, height_tilde_o;
  std::optional<CommutativePlane> plane;
  std::string golden_id;
  std::vector<int> golden_params;
  std::optional<GoldenValues> golden;
  std::vector<Check> checks;

  /// All non-informational checks pass.
  bool passed() const;
  const Check* find(const std::string& name) const;
};

struct RunOptions {
  std::uint64_t seed = 1729;
  int samples = 32;
  int grid = 2;
  bool census = true;
};

/// dim O <= dim h - rank h; false proves that (P2) fails.
bool p2_dimension_filter(const EmbeddingCase& c, const OrbitId& o);

/// Matrix representative of a classical or G2 orbit in the ambient model.
RatMatrix ambient_representative(const EmbeddingCase& c, const OrbitId& o);

/// dim [h, x], exact.
Index h_orbit_dim(const EmbeddingCase& c, const RatMatrix& x);

/// Conjugates the representative by random unipotent group elements until
/// dim [h, x] = dim O. A returned witness proves (P2).
std::optional<P2Witness> certify_p2(const EmbeddingCase& c, const OrbitId& o, int samples, std::uint64_t seed,
                                    Index* best_dim = nullptr);

/// Checks c1..c5 and dim h - dim z_h(a) = dim O for a witness e.
std::vector<Check> verify_projection_identities(const EmbeddingCase& c, const OrbitId& o, const RatMatrix& e);

/// Ambient orbit of the h-component. Throws AmbientExceptionalUnsupported.
OrbitId compute_tilde_o(const EmbeddingCase& c, const RatMatrix& e);

/// Product of pi_1 orders of the factor orbits over pi_1 of O.
/// Throws NonIntegerRatio when the ratio is not an integer.
int compute_deg_phi(const OrbitId& o, const std::vector<OrbitId>& phi_factors);

/// Height of a product orbit: the largest factor height.
int product_height(const std::vector<OrbitId>& factors);

Check verify_height_identity(const std::vector<OrbitId>& phi_factors, const OrbitId& tilde_o);
Check verify_good_orbit_height(const OrbitId& o);
/// G.a = G.b in the ambient algebra.
Check verify_ga_equals_gb(const EmbeddingCase& c, const RatMatrix& e);

/// Ambient orbits of c1 a + c2 b for integer |c_i| <= grid, not both zero.
/// With check_cube, also tests (ad x)^3 = 0 at every sample.
CommutativePlane plane_census(const EmbeddingCase& c, const RatMatrix& e, int grid, bool check_cube);

/// D4 orbits exchanged by an outer automorphism.
bool triality_related(const Partition& p, const Partition& q);

/// Full verification of one case for one orbit (defaults to the case's own).
VerificationReport run_case(const EmbeddingCase& c, const RunOptions& opts = {},
                            const std::optional<OrbitId>& orbit = std::nullopt);

/// Orbit strings compared the way the tables print them: a very even tag
/// on one side only is ignored.
bool same_orbit_string(const std::string& computed, const std::string& golden);

struct TripleResult {
  std::string name;
  std::string left, right;  // the two H1-orbits that must coincide
  bool pass = false;
};

/// Coincidences between projections along chains g > h1 > h2.
std::vector<TripleResult> verify_triples(const RunOptions& opts = {});

}  // namespace atlas
