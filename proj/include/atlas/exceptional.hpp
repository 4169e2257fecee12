#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "atlas/orbits.hpp"

namespace atlas {

struct ExceptionalOrbitRecord {
  LieType type;
  std::string label;
  int dim = 0;
  int height = 0;
  std::optional<int> pi1_order;
  std::string source;
};

/// Accepts the aliases "Osub" (G2(a1)) and "A1+Ã1".
const ExceptionalOrbitRecord& lookup_exceptional(const LieType& type, const std::string& label);

std::vector<ExceptionalOrbitRecord> exceptional_orbits(const LieType& type);

/// The G2 orbit with the given centralizer dimension in g2.
const ExceptionalOrbitRecord& g2_orbit_by_centralizer(int centralizer_dim);

/// Numeric content of one table row for a fixed parameter choice.
struct GoldenValues {
  int dim_m = 0;
  int dim_orbit = 0;  // dim Omin in the first table, dim O in the second
  std::string orbit;  // the good orbit O
  std::string phi_orbit;
  std::string tilde_o;
  int dim_tilde_o = 0;
  int deg_phi = 0;
  int height_tilde_o = 0;
};

struct GoldenRow {
  std::string id;        // "T1.3", "T2.i", ...
  std::string pair;      // "B_n, D_n"
  std::string params;    // "n", "k,m", "n_1..n_k" or empty
  std::string provenance;
  std::function<GoldenValues(const std::vector<int>&)> evaluate;
};

/// Eleven rows of the first table and two of the second.
const std::vector<GoldenRow>& golden_rows();

const GoldenRow& golden_row(const std::string& id);

/// Product notation for orbits of a product of simple factors.
std::string product_orbit_string(const std::vector<std::string>& factors);

}  // namespace atlas
