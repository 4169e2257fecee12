#pragma once

#include <optional>
#include <string>
#include <vector>

namespace atlas {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  bool classical() const;
  /// Size of the defining matrices of the model (7 for G2).
  int defining_dim() const;
  int algebra_dim() const;
  std::string name() const;

  bool operator==(const LieType&) const = default;
};

LieType parse_lie_type(const std::string& family, int rank);

enum class VeryEvenTag { None, I, II, Undetermined };

struct Partition {
  std::vector<int> parts;
  VeryEvenTag tag = VeryEvenTag::None;

  Partition() = default;
  Partition(std::vector<int> p, VeryEvenTag t = VeryEvenTag::None);

  int boxes() const;
  bool all_even() const;
  int multiplicity(int part) const;
  /// Exponent form, e.g. "3,2^2,1^2" or "2^4_I".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
};

/// Parses "3,2^2,1^2", "(3,2^2,1^2)" or "2^4_I".
Partition parse_partition(const std::string& text);

/// Builds a partition from (part, multiplicity) pairs, skipping zero counts.
Partition make_partition(std::initializer_list<std::pair<int, int>> blocks,
                         VeryEvenTag tag = VeryEvenTag::None);

std::vector<int> conjugate(const std::vector<int>& parts);

/// Dominance order: true iff every partial sum of lo is at most that of hi.
bool dominated_by(const std::vector<int>& lo, const std::vector<int>& hi);

struct OrbitId {
  LieType type;
  std::optional<Partition> partition;
  std::string label;

  static OrbitId classical(LieType t, Partition p);
  static OrbitId exceptional(LieType t, std::string label);

  bool is_classical() const { return partition.has_value(); }
  std::string to_string() const;

  bool operator==(const OrbitId&) const = default;
};

using WeightedDynkinDiagram = std::vector<int>;

bool validate_partition(const LieType& t, const Partition& p);
int orbit_dimension(const LieType& t, const Partition& p);
bool closure_leq(const LieType& t, const Partition& p, const Partition& q);

/// Eigenvalues of the characteristic on the defining space, sorted descending.
std::vector<int> characteristic(const LieType& t, const Partition& p);

WeightedDynkinDiagram weighted_dynkin(const LieType& t, const Partition& p);

/// Characteristic multiset rebuilt from a diagram, sorted descending.
std::vector<int> characteristic_from_diagram(const LieType& t, const WeightedDynkinDiagram& d);

int orbit_height(const LieType& t, const Partition& p);

enum class GroupForm { SimplyConnected, Matrix, Adjoint };

/// Order of the fundamental group of the orbit for SL_N / Spin_N / Sp_N
/// (SimplyConnected) or SL_N / SO_N / Sp_N (Matrix).
int fundamental_group_order(const LieType& t, const Partition& p, GroupForm form);

constexpr int kDefaultRankBound = 12;

/// All orbits of t; very even partitions appear twice, tagged I and II.
std::vector<Partition> enumerate_orbits(const LieType& t, int rank_bound = kDefaultRankBound);

std::string hasse_dot(const LieType& t, int rank_bound = kDefaultRankBound);

Partition minimal_orbit(const LieType& t);
Partition zero_orbit(const LieType& t);

}  // namespace atlas
