#include "doctest.h"

#include "atlas/error.hpp"
#include "atlas/exceptional.hpp"

using namespace atlas;

TEST_CASE("exceptional records") {
  const LieType g2{Family::G2, 2}, f4{Family::F4, 4};
  CHECK(lookup_exceptional(g2, "G2(a1)").dim == 10);
  CHECK(lookup_exceptional(g2, "Osub").pi1_order == 6);
  CHECK(lookup_exceptional(g2, "Ã1").dim == 8);
  CHECK(lookup_exceptional(g2, "Ã1").height == 3);
  CHECK(lookup_exceptional(g2, "G2").height == 10);
  CHECK(lookup_exceptional(f4, "Ã1").dim == 22);
  CHECK(lookup_exceptional(f4, "A1+Ã1").dim == 28);
  CHECK_THROWS_AS(lookup_exceptional(g2, "E8"), Error);
  int last = -1;
  for (const auto& r : exceptional_orbits(g2)) {
    CHECK(r.dim > last);
    last = r.dim;
  }
  CHECK(g2_orbit_by_centralizer(6).label == "Ã1");
  CHECK_THROWS_AS(g2_orbit_by_centralizer(5), Error);
}

TEST_CASE("golden rows are internally consistent") {
  CHECK(golden_rows().size() == 13);
  // dim m = dim g - dim h
  CHECK(golden_row("T1.1").evaluate({}).dim_m == 52 - 36);
  CHECK(golden_row("T1.2").evaluate({}).dim_m == 78 - 52);
  CHECK(golden_row("T1.8").evaluate({}).dim_m == 52 - 28);
  CHECK(golden_row("T1.6").evaluate({}).dim_m == 21 - 14);
  CHECK(golden_row("T1.9").evaluate({}).dim_m == 14 - 8);
  CHECK(golden_row("T1.10").evaluate({}).dim_m == 28 - 14);
  for (int n = 2; n <= 6; ++n) {
    const int so2n1 = n * (2 * n + 1), so2n = n * (2 * n - 1), so2n2 = (n + 1) * (2 * n + 1);
    CHECK(golden_row("T1.3").evaluate({n}).dim_m == so2n1 - so2n);
    CHECK(golden_row("T1.4").evaluate({n}).dim_m == so2n2 - so2n1);
    CHECK(golden_row("T1.5").evaluate({n}).dim_m == (4 * n * n - 1) - n * (2 * n + 1));
  }
  CHECK(golden_row("T1.11").evaluate({1, 1, 1}).dim_m == 12);
  CHECK(golden_row("T1.11").evaluate({1, 1}).deg_phi == 2);
  CHECK(golden_row("T1.11").evaluate({1, 1, 1}).deg_phi == 4);
  const auto t2 = golden_row("T2.i").evaluate({2, 1});
  CHECK(t2.dim_tilde_o == 2 * 2 * (4 + 1));
  CHECK(golden_row("T2.i").evaluate({2, 0}).deg_phi == 1);
  CHECK(golden_row("T2.ii").evaluate({}).deg_phi == 3);
  // every exceptional label resolves
  for (const auto& row : golden_rows()) {
    std::vector<int> params;
    if (row.params == "n") params = {3};
    else if (row.params == "k,m") params = {2, 1};
    else if (!row.params.empty()) params = {1, 2};
    const GoldenValues v = row.evaluate(params);
    for (const std::string& s : {v.orbit, v.phi_orbit, v.tilde_o})
      if (!s.empty() && s.front() != '(') {
        bool found = false;
        for (Family f : {Family::G2, Family::F4, Family::E6}) {
          try {
            lookup_exceptional(LieType{f, f == Family::G2 ? 2 : (f == Family::F4 ? 4 : 6)}, s);
            found = true;
          } catch (const Error&) {
          }
        }
        CHECK_MESSAGE(found, s);
      }
  }
  CHECK_THROWS_AS(golden_row("T3.1"), Error);
}
