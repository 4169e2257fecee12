#include "doctest.h"

#include "atlas/error.hpp"
#include "atlas/linalg.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

// Random rational matrix of rank at most r: a product of two thin factors.
RatMatrix low_rank(Index rows, Index cols, Index r, std::mt19937_64& rng) {
  RatMatrix m = oracle::random_integer(rows, r, 4, rng) * oracle::random_integer(r, cols, 4, rng);
  m.row(0) /= Rational(3);
  return m;
}

RatMatrix nilpotent_with_type(const std::vector<int>& parts, std::mt19937_64& rng) {
  int n = 0;
  for (int p : parts) n += p;
  RatMatrix j = RatMatrix::Zero(n, n);
  int off = 0;
  for (int p : parts) {
    for (int i = 0; i + 1 < p; ++i) j(off + i, off + i + 1) = 1;
    off += p;
  }
  // conjugate by a unimodular triangular product so the shape is hidden
  RatMatrix u = RatMatrix::Identity(n, n), l = RatMatrix::Identity(n, n);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      u(i, k) = d(rng);
      l(k, i) = d(rng);
    }
  RatMatrix g = u * l;
  return g * j * *inverse(g);
}

}  // namespace

TEST_CASE("rank agrees with textbook elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = 2 + trial % 7, cols = 3 + (trial * 5) % 8, r = 1 + trial % 4;
    const RatMatrix m = low_rank(rows, cols, r, rng);
    const Index expected = oracle::rank(m);
    CHECK(rank(m) == expected);
    CHECK(rank(RatMatrix(m.transpose())) == expected);
    CHECK(fraction_free_echelon(m).rank() == expected);
    auto fast = rank_mod_prime(m);
    REQUIRE(fast.has_value());
    CHECK(*fast <= expected);
  }
}

TEST_CASE("kernel basis has the right size and is annihilated") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const RatMatrix m = low_rank(4 + trial % 3, 7, 1 + trial % 3, rng);
    const auto ker = kernel_basis(m);
    CHECK(static_cast<Index>(ker.size()) + oracle::rank(m) == m.cols());
    for (const RatVector& v : ker) CHECK(is_zero(RatVector(m * v)));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = oracle::random_integer(5, 5, 3, rng);
    a += RatMatrix::Identity(5, 5) * Rational(17);  // diagonally dominant
    const RatVector x = oracle::random_integer(5, 1, 5, rng).col(0);
    const auto sol = solve(a, RatVector(a * x));
    REQUIRE(sol.has_value());
    CHECK(*sol == x);
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(*inv * a == RatMatrix::Identity(5, 5));
  }
  RatMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK_FALSE(inverse(singular).has_value());
  RatVector b(2);
  b << 1, 0;
  CHECK_FALSE(solve(singular, b).has_value());
}

TEST_CASE("jordan type of hidden nilpotents") {
  std::mt19937_64 rng(14);
  const std::vector<std::vector<int>> shapes{{1}, {2}, {3, 1}, {2, 2, 1}, {4, 2, 2}, {3, 3, 1, 1}, {5, 1, 1}};
  for (const auto& shape : shapes) {
    const RatMatrix x = nilpotent_with_type(shape, rng);
    CHECK(is_nilpotent(x));
    CHECK(jordan_type_nilpotent(x).parts == shape);
    CHECK(oracle::jordan_type(x) == shape);
    CHECK(jordan_type_from_ranks(rank_sequence(JordanType{shape})).parts == shape);
  }
  RatMatrix id = RatMatrix::Identity(3, 3);
  CHECK_FALSE(is_nilpotent(id));
  CHECK_THROWS_AS(jordan_type_nilpotent(id), Error);
}

TEST_CASE("cayley transform preserves the form") {
  const int n = 6;
  RatMatrix form = RatMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) form(i, n - 1 - i) = 1;
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    // x in so(form): x^T form + form x = 0
    RatMatrix y = oracle::random_integer(n, n, 2, rng);
    RatMatrix x = y - form * y.transpose() * form;
    const RatMatrix g = cayley_orthogonal(x * Rational(1, 7), form);
    CHECK(preserves_form(g, form));
    CHECK(cayley(RatMatrix(x * Rational(1, 7))) * cayley(RatMatrix(x * Rational(-1, 7))) == RatMatrix::Identity(n, n));
  }
  RatMatrix s = RatMatrix::Zero(n, n);
  s(0, 1) = 1;
  s(1, 2) = 1;
  CHECK(exp_nilpotent(s) * exp_nilpotent(RatMatrix(-s)) == RatMatrix::Identity(n, n));
}
