#include "doctest.h"

#include <algorithm>

#include "atlas/classical.hpp"
#include "atlas/error.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

bool preserves(const RatMatrix& x, const RatMatrix& form) {
  return is_zero(RatMatrix(x.transpose() * form + form * x));
}

}  // namespace

TEST_CASE("classical algebras have the right dimension and are closed") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 3 : 1); r <= 4; ++r) {
      const LieType t{f, r};
      const MatrixLieAlgebra g = build_classical(t);
      CAPTURE(t.name());
      CHECK(g.dim() == t.algebra_dim());
      for (const RatMatrix& x : g.basis()) {
        if (f == Family::A) CHECK(x.trace() == 0);
        else CHECK(preserves(x, g.form()));
      }
      if (r <= 2)
        for (const RatMatrix& x : g.basis())
          for (const RatMatrix& y : g.basis()) CHECK(g.contains(commutator(x, y)));
    }
  CHECK_THROWS_AS(build_classical(LieType{Family::G2, 2}), Error);
  CHECK_THROWS_AS(build_classical(LieType{Family::A, 13}), Error);
}

TEST_CASE("standard representatives realize every orbit") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 3 : 1); r <= 4; ++r) {
      const LieType t{f, r};
      const MatrixLieAlgebra g = build_classical(t);
      for (const Partition& p : enumerate_orbits(t)) {
        CAPTURE(t.name());
        CAPTURE(p.to_string());
        const RatMatrix e = standard_representative(t, p);
        const RatMatrix h = standard_characteristic(t, p);
        CHECK(g.contains(e));
        CHECK(oracle::jordan_type(e) == p.parts);
        CHECK(commutator(h, e) == Rational(2) * e);
        CHECK(g.dim() - g.centralizer_dim(e) == orbit_dimension(t, p));
        std::vector<int> diag;
        for (Index i = 0; i < h.rows(); ++i) diag.push_back(h(i, i).convert_to<int>());
        std::sort(diag.rbegin(), diag.rend());
        CHECK(diag == characteristic(t, p));
        if (p.tag == VeryEvenTag::I || p.tag == VeryEvenTag::II) {
          CHECK(very_even_tag_from_characteristic(h) == p.tag);
          CHECK(very_even_tag(e) == p.tag);
        }
      }
    }
  CHECK_THROWS_AS(standard_representative(LieType{Family::D, 4}, make_partition({{2, 4}}, VeryEvenTag::Undetermined)),
                  Error);
}

TEST_CASE("sl2 triples complete the representatives") {
  for (Family f : {Family::B, Family::C, Family::D})
    for (int r = 3; r <= 4; ++r) {
      const LieType t{f, r};
      const MatrixLieAlgebra g = build_classical(t);
      for (const Partition& p : enumerate_orbits(t)) {
        if (p.parts.front() == 1) continue;
        const Sl2Triple tr = complete_sl2(g, standard_representative(t, p));
        CHECK(commutator(tr.h, tr.e) == Rational(2) * tr.e);
        CHECK(commutator(tr.h, tr.f) == Rational(-2) * tr.f);
        CHECK(commutator(tr.e, tr.f) == tr.h);
        CHECK(g.contains(tr.h));
        CHECK(g.contains(tr.f));
        // the characteristic is determined up to conjugacy: compare spectra
        const auto eig = ad_eigenvalues(g, tr.h);
        const auto eig_std = ad_eigenvalues(g, standard_characteristic(t, p));
        CHECK(eig == eig_std);
        CHECK(matrix_height(g, tr.e) == orbit_height(t, p));
      }
    }
}

TEST_CASE("identify_orbit recovers conjugated representatives") {
  std::mt19937_64 rng(7);
  const LieType d4{Family::D, 4};
  const MatrixLieAlgebra g = build_classical(d4);
  const auto up = weight_graded_part(g, regular_weights(8), 1);
  const auto down = weight_graded_part(g, regular_weights(8), -1);
  CHECK(up.size() == 12);
  CHECK(down.size() == 12);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const Partition& p : enumerate_orbits(d4)) {
    RatMatrix s = RatMatrix::Zero(8, 8), t = RatMatrix::Zero(8, 8);
    for (const auto& u : up) s += Rational(d(rng)) * u;
    for (const auto& v : down) t += Rational(d(rng)) * v;
    const RatMatrix gmat = cayley_orthogonal(s, g.form()) * cayley_orthogonal(t, g.form());
    const RatMatrix x = gmat * standard_representative(d4, p) * *inverse(gmat);
    CHECK(preserves_form(gmat, g.form()));
    const ElementOrbitWitness w = identify_orbit(g, x);
    CHECK(w.orbits.front() == OrbitId::classical(d4, p));
    CHECK(w.orbit_dim() == orbit_dimension(d4, p));
  }
}

TEST_CASE("lie closure and spans") {
  const MatrixLieAlgebra sl3 = build_classical(LieType{Family::A, 2});
  // E_12 and E_21 generate sl2
  std::vector<RatMatrix> gens{sl3.basis()[0], RatMatrix(sl3.basis()[0].transpose())};
  CHECK(lie_closure(gens).size() == 3);
  CHECK(independent_span({gens[0], gens[0], gens[1]}).size() == 2);
  RatMatrix outside = RatMatrix::Identity(3, 3);
  CHECK_FALSE(sl3.contains(outside));
  CHECK_THROWS_AS(sl3.coords(outside), Error);
}
