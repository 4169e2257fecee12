#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atlas/scalar.hpp"

namespace atlas {

/// Jordan type of a nilpotent matrix: block sizes, weakly decreasing.
struct JordanType {
  std::vector<int> parts;

  int size() const;
  bool operator==(const JordanType&) const = default;
};

/// Row echelon form over the integers. Each input row is first multiplied by
/// the lcm of its denominators, then Bareiss elimination keeps every entry a
/// minor of the scaled matrix.
struct Echelon {
  MatrixX<Integer> rows;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Echelon fraction_free_echelon(const RatMatrix& m);

Index rank(const RatMatrix& m);

/// Rank over F_p for p = 2^61 - 1. Never exceeds the rational rank, so a value
/// equal to a known upper bound certifies the exact rank. Returns nullopt when
/// some denominator vanishes mod p.
std::optional<Index> rank_mod_prime(const RatMatrix& m);

/// Basis of the right kernel; rank(m) + size = m.cols().
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// One exact solution of a x = b, or nullopt if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Solves a X = B column by column with a single elimination.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// True when m^dim = 0; decided by repeated squaring.
bool is_nilpotent(const RatMatrix& m);

/// Block sizes from the rank sequence r_k = rank(m^k): the number of blocks
/// of size at least k is r_{k-1} - r_k. Throws NotNilpotent.
JordanType jordan_type_nilpotent(const RatMatrix& m);

/// Jordan type from a precomputed rank sequence r_0 = n, r_1, ..., ending in 0.
JordanType jordan_type_from_ranks(const std::vector<Index>& ranks);

/// Ranks of m^0, m^1, ... implied by a Jordan type.
std::vector<Index> rank_sequence(const JordanType& type);

/// g = (I + s)(I - s)^{-1}. With s skew for `form` (s^T form + form s = 0)
/// the result satisfies g^T form g = form. Throws Singular.
RatMatrix cayley_orthogonal(const RatMatrix& s, const RatMatrix& form);

/// Same transform without the skewness precondition.
RatMatrix cayley(const RatMatrix& s);

bool preserves_form(const RatMatrix& g, const RatMatrix& form);

/// exp(s) for nilpotent s, as the finite Taylor sum.
RatMatrix exp_nilpotent(const RatMatrix& s);

std::string to_string(const RatVector& v);

}  // namespace atlas
