#include "doctest.h"

#include "atlas/classical.hpp"
#include "atlas/embeddings.hpp"
#include "atlas/error.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

void check_decomposition(const EmbeddingCase& c) {
  CAPTURE(c.id);
  const MatrixLieAlgebra& g = *c.ambient;
  const MatrixLieAlgebra& h = *c.sub;
  CHECK(h.dim() + static_cast<Index>(c.complement.size()) == g.dim());
  for (const RatMatrix& x : h.basis()) {
    for (const RatMatrix& y : h.basis()) CHECK(h.contains(commutator(x, y)));
    for (const RatMatrix& m : c.complement) {
      CHECK(sparse_product(x, m).trace() == 0);
      const Projection p = project(c, commutator(x, m));
      CHECK(is_zero(p.a));  // [h, m] in m
    }
  }
  // trace form nondegenerate on h
  RatMatrix gram(h.dim(), h.dim());
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j) gram(i, j) = sparse_product(h.basis()[i], h.basis()[j]).trace();
  CHECK(oracle::rank(gram) == h.dim());
}

}  // namespace

TEST_CASE("complement dimensions") {
  CHECK(make_case("T1.row6").dim_m() == 7);
  CHECK(make_case("T1.row7").dim_m() == 15);
  CHECK(make_case("T1.row10").dim_m() == 14);
  CHECK(make_case("T1.row9").dim_m() == 6);
  CHECK(make_case("T1.row11", {1, 1, 1}).dim_m() == 12);
  CHECK(make_case("T1.row3(4)").dim_m() == 8);
  CHECK(make_case("T1.row1").dim_m() == 16);
  CHECK(make_case("T1.row2").dim_m() == 26);
  CHECK(make_case("T1.row1").data_only);
}

TEST_CASE("h + m decompositions") {
  for (const char* id : {"T1.row3(3)", "T1.row4(3)", "T1.row5(2)", "T1.row6", "T1.row9", "T1.row11(1,2)",
                         "T1.row4-spin", "NEG.so7-in-so9-standard"})
    check_decomposition(make_case(id));
}

TEST_CASE("row 7 complement splits as 7 + 8 under spin_7") {
  // m = (so_8 part, complement of spin_7 in so_8) + (complement of so_8 in so_9)
  const EmbeddingCase c = make_case("T1.row7");
  const EmbeddingCase so8 = make_case("T1.row3(4)");
  auto meet = [&](const std::vector<RatMatrix>& other) {
    std::vector<RatMatrix> both = c.complement;
    both.insert(both.end(), other.begin(), other.end());
    return static_cast<Index>(c.complement.size() + other.size()) - oracle::rank(stack_columns(both));
  };
  CHECK(meet(so8.sub->basis()) == 7);
  CHECK(meet(so8.complement) == 8);
}

TEST_CASE("projection is exact") {
  std::mt19937_64 rng(3);
  for (const char* id : {"T1.row6", "T1.row10", "T1.row5(3)"}) {
    const EmbeddingCase c = make_case(id);
    for (int t = 0; t < 5; ++t) {
      RatVector coords = oracle::random_integer(c.ambient->dim(), 1, 3, rng).col(0);
      const RatMatrix x = c.ambient->element(coords);
      const Projection p = project(c, x);
      CHECK(p.a + p.b == x);
      CHECK(c.sub->contains(p.a));
      for (const RatMatrix& y : c.sub->basis()) CHECK(sparse_product(y, p.b).trace() == 0);
    }
    const RatMatrix inside = c.sub->basis().front();
    CHECK(project(c, inside).a == inside);
    CHECK(is_zero(project(c, c.complement.front()).a));
  }
}

TEST_CASE("involution of a symmetric pair is an automorphism") {
  const EmbeddingCase c = make_case("T1.row4(3)");
  const RatMatrix s = involution_matrix(c);
  const MatrixLieAlgebra& g = *c.ambient;
  CHECK(s * s == RatMatrix::Identity(g.dim(), g.dim()));
  for (Index i = 0; i < g.dim(); i += 3)
    for (Index j = 0; j < g.dim(); j += 2) {
      const RatVector lhs = s * g.coords(commutator(g.basis()[i], g.basis()[j]));
      const RatVector rhs = g.coords(commutator(g.element(s.col(i)), g.element(s.col(j))));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("standard so_7 in so_9 sits in the middle block") {
  const EmbeddingCase c = make_case("NEG.so7-in-so9-standard");
  CHECK(c.negative_control);
  for (const RatMatrix& x : c.sub->basis()) {
    CHECK(x.row(0).isZero());
    CHECK(x.row(8).isZero());
  }
}

TEST_CASE("odd in even embedding preserves brackets") {
  const MatrixLieAlgebra so7 = build_classical(LieType{Family::B, 3});
  const MatrixLieAlgebra so8 = build_classical(LieType{Family::D, 4});
  for (std::size_t i = 0; i < so7.basis().size(); i += 2)
    for (std::size_t j = 0; j < so7.basis().size(); j += 3) {
      const RatMatrix &x = so7.basis()[i], &y = so7.basis()[j];
      CHECK(embed_odd_in_even(commutator(x, y)) == commutator(embed_odd_in_even(x), embed_odd_in_even(y)));
      CHECK(so8.contains(embed_odd_in_even(x)));
    }
  const RatMatrix e = standard_representative(LieType{Family::B, 3}, make_partition({{3, 1}, {1, 4}}));
  CHECK(oracle::jordan_type(embed_odd_in_even(e)) == std::vector<int>{3, 1, 1, 1, 1, 1});
  CHECK(oracle::jordan_type(embed_even_in_odd(standard_representative(LieType{Family::D, 4}, make_partition({{2, 2}, {1, 4}})))) ==
        std::vector<int>{2, 2, 1, 1, 1, 1, 1});
}

TEST_CASE("Satake criterion") {
  const EmbeddingCase std8 = make_case("T1.row4(3)");
  const EmbeddingCase spin = make_case("T1.row4-spin");
  CHECK(satake_meets_criterion(std8, make_partition({{3, 1}, {1, 5}})));
  CHECK_FALSE(satake_meets_criterion(std8, make_partition({{2, 4}}, VeryEvenTag::I)));
  CHECK_FALSE(satake_meets_criterion(std8, make_partition({{2, 4}}, VeryEvenTag::II)));
  CHECK_FALSE(satake_meets_criterion(spin, make_partition({{3, 1}, {1, 5}})));
  CHECK_FALSE(satake_meets_criterion(spin, make_partition({{2, 4}}, VeryEvenTag::I)));
  CHECK(satake_meets_criterion(spin, make_partition({{2, 4}}, VeryEvenTag::II)));
  CHECK_THROWS_AS(satake_meets_criterion(make_case("T1.row6"), make_partition({{2, 2}, {1, 3}})), Error);

  for (int N = 7; N <= 12; ++N) {
    const EmbeddingCase c = N % 2 ? make_case("T1.row3", {(N - 1) / 2}) : make_case("T1.row4", {(N - 2) / 2});
    std::vector<Partition> expected;
    for (int k = 1; 4 * k <= N; ++k) {
      if (4 * k == N) {
        expected.push_back(make_partition({{2, 2 * k}}, VeryEvenTag::I));
        expected.push_back(make_partition({{2, 2 * k}}, VeryEvenTag::II));
      } else {
        expected.push_back(make_partition({{2, 2 * k}, {1, N - 4 * k}}));
      }
    }
    auto good = good_orbits_via_satake(c);
    auto key = [](const Partition& p) { return p.to_string(); };
    std::sort(good.begin(), good.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(expected.begin(), expected.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    CAPTURE(N);
    CHECK(good == expected);
  }
}

TEST_CASE("case ids") {
  CHECK(parse_case_id("T1.row3(4)") == std::make_pair(std::string("T1.row3"), std::vector<int>{4}));
  CHECK(parse_case_id("T2.i(2,1)").second == std::vector<int>{2, 1});
  CHECK_THROWS_AS(make_case("T9.row1"), Error);
  CHECK_THROWS_AS(make_case("T1.row3"), Error);
  CHECK_THROWS_AS(make_case("T1.row3(x)"), Error);
  CHECK_THROWS_AS(make_case("T1.row11", {3}), Error);
  CHECK(make_case("T1.row3", {4}).id == "T1.row3(4)");
  CHECK(make_case("T2.i", {2, 0}).default_orbit.to_string() == "(2^4_I)");
}
