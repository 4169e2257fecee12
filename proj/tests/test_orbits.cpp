#include "doctest.h"

#include <map>

#include "atlas/error.hpp"
#include "atlas/orbits.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

int defining(Family f, int r) {
  switch (f) {
    case Family::A: return r + 1;
    case Family::B: return 2 * r + 1;
    default: return 2 * r;
  }
}

// Parity rules written out directly: in so, even parts come in pairs; in
// sp, odd parts come in pairs. Very even so_{2n} partitions count twice.
int expected_orbit_count(Family f, int r) {
  int count = 0;
  for (const auto& p : oracle::partitions(defining(f, r))) {
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    bool ok = true, very_even = true;
    for (auto [part, m] : mult) {
      if (f != Family::A && f != Family::C && part % 2 == 0 && m % 2) ok = false;
      if (f == Family::C && part % 2 == 1 && m % 2) ok = false;
      if (part % 2) very_even = false;
    }
    if (ok) count += (f == Family::D && very_even) ? 2 : 1;
  }
  return count;
}

// Dimension through the conjugate partition.
int dimension_formula(Family f, const std::vector<int>& p) {
  int N = 0, odd = 0, sq = 0;
  for (int x : p) {
    N += x;
    if (x % 2) ++odd;
  }
  for (int c : conjugate(p)) sq += c * c;
  switch (f) {
    case Family::A: return N * N - sq;
    case Family::C: return N * (N + 1) / 2 - (sq + odd) / 2;
    default: return N * (N - 1) / 2 - (sq - odd) / 2;
  }
}

}  // namespace

TEST_CASE("orbit counts follow the parity rules") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 2 : 1); r <= 7; ++r) {
      const LieType t{f, r};
      CAPTURE(t.name());
      CHECK(static_cast<int>(enumerate_orbits(t).size()) == expected_orbit_count(f, r));
    }
  CHECK(enumerate_orbits(LieType{Family::B, 3}).size() == 7);
  CHECK(enumerate_orbits(LieType{Family::A, 1}).size() == 2);
}

TEST_CASE("orbit dimensions match the conjugate-partition formula") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 2 : 1); r <= 7; ++r) {
      const LieType t{f, r};
      for (const Partition& p : enumerate_orbits(t)) {
        CAPTURE(p.to_string());
        CHECK(orbit_dimension(t, p) == dimension_formula(f, p.parts));
      }
    }
  CHECK(orbit_dimension(LieType{Family::B, 3}, make_partition({{2, 2}, {1, 3}})) == 8);
  CHECK(orbit_dimension(LieType{Family::B, 3}, make_partition({{3, 1}, {2, 2}})) == 12);
  CHECK(orbit_dimension(LieType{Family::D, 4}, make_partition({{2, 4}}, VeryEvenTag::I)) == 12);
}

TEST_CASE("closure order is a partial order refining dimension") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 3 : 1); r <= 5; ++r) {
      const LieType t{f, r};
      const auto orbits = enumerate_orbits(t);
      for (const auto& p : orbits) {
        CHECK(closure_leq(t, p, p));
        for (const auto& q : orbits) {
          if (closure_leq(t, p, q) && closure_leq(t, q, p)) CHECK(p == q);
          if (closure_leq(t, p, q) && !(p == q)) CHECK(orbit_dimension(t, p) < orbit_dimension(t, q));
          for (const auto& s : orbits)
            if (closure_leq(t, p, q) && closure_leq(t, q, s)) CHECK(closure_leq(t, p, s));
        }
      }
    }
  const LieType d4{Family::D, 4};
  CHECK_FALSE(closure_leq(d4, make_partition({{2, 4}}, VeryEvenTag::I), make_partition({{2, 4}}, VeryEvenTag::II)));
  CHECK(closure_leq(d4, make_partition({{2, 4}}, VeryEvenTag::I), make_partition({{3, 1}, {2, 2}, {1, 1}})));
}

TEST_CASE("partition text round trip") {
  const Partition p = parse_partition("(3,2^2,1^2)");
  CHECK(p.parts == std::vector<int>{3, 2, 2, 1, 1});
  CHECK(p.to_string() == "3,2^2,1^2");
  CHECK(parse_partition("2^4_II").tag == VeryEvenTag::II);
  CHECK(parse_partition(p.to_string()) == p);
  CHECK_THROWS_AS(parse_partition("3,x"), Error);
  CHECK(conjugate({3, 2, 2, 1}) == std::vector<int>{4, 3, 1});
  CHECK(dominated_by({2, 2, 1}, {3, 1, 1}));
  CHECK_FALSE(dominated_by({3, 1, 1}, {2, 2, 1}));
}

TEST_CASE("partition validity") {
  CHECK(validate_partition(LieType{Family::B, 3}, make_partition({{3, 1}, {2, 2}})));
  CHECK_FALSE(validate_partition(LieType{Family::B, 3}, make_partition({{2, 1}, {1, 5}})));
  CHECK_FALSE(validate_partition(LieType{Family::C, 2}, make_partition({{3, 1}, {1, 1}})));
  CHECK_FALSE(validate_partition(LieType{Family::D, 4}, make_partition({{2, 4}})));  // tag missing
  CHECK_FALSE(validate_partition(LieType{Family::B, 3}, make_partition({{3, 1}, {1, 3}})));  // wrong size
}

TEST_CASE("weighted Dynkin diagrams and characteristics") {
  const LieType d4{Family::D, 4};
  CHECK(weighted_dynkin(d4, make_partition({{2, 4}}, VeryEvenTag::I)) == std::vector<int>{0, 0, 2, 0});
  CHECK(weighted_dynkin(d4, make_partition({{2, 4}}, VeryEvenTag::II)) == std::vector<int>{0, 0, 0, 2});
  CHECK(weighted_dynkin(d4, make_partition({{3, 1}, {1, 5}})) == std::vector<int>{2, 0, 0, 0});
  CHECK(weighted_dynkin(d4, make_partition({{2, 2}, {1, 4}})) == std::vector<int>{0, 1, 0, 0});
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 3 : 1); r <= 6; ++r) {
      const LieType t{f, r};
      for (const Partition& p : enumerate_orbits(t)) {
        const auto d = weighted_dynkin(t, p);
        for (int x : d) CHECK((x == 0 || x == 1 || x == 2));
        CHECK(characteristic_from_diagram(t, d) == characteristic(t, p));
      }
    }
}

TEST_CASE("heights") {
  const LieType b3{Family::B, 3}, d4{Family::D, 4};
  CHECK(orbit_height(b3, make_partition({{2, 2}, {1, 3}})) == 2);
  CHECK(orbit_height(b3, make_partition({{3, 1}, {1, 4}})) == 2);
  CHECK(orbit_height(b3, make_partition({{3, 1}, {2, 2}})) == 3);
  CHECK(orbit_height(b3, make_partition({{3, 2}, {1, 1}})) == 4);
  CHECK(orbit_height(LieType{Family::B, 4}, make_partition({{3, 1}, {2, 2}, {1, 2}})) == 3);
  CHECK(orbit_height(d4, make_partition({{3, 2}, {1, 2}})) == 4);
  CHECK(orbit_height(LieType{Family::A, 3}, make_partition({{2, 2}})) == 2);
  CHECK(orbit_height(LieType{Family::A, 2}, make_partition({{3, 1}})) == 4);
  CHECK_THROWS_AS(orbit_height(b3, zero_orbit(b3)), Error);
  // the minimal orbit always has height 2
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 3 : (f == Family::B ? 2 : 1)); r <= 7; ++r)
      CHECK(orbit_height(LieType{f, r}, minimal_orbit(LieType{f, r})) == 2);
}

TEST_CASE("fundamental groups, simply connected form") {
  const LieType b3{Family::B, 3}, d4{Family::D, 4}, b4{Family::B, 4};
  auto sc = [](const LieType& t, const Partition& p) {
    return fundamental_group_order(t, p, GroupForm::SimplyConnected);
  };
  CHECK(sc(b3, make_partition({{3, 1}, {1, 4}})) == 2);
  CHECK(sc(b3, make_partition({{3, 1}, {2, 2}})) == 2);
  CHECK(sc(b3, make_partition({{2, 2}, {1, 3}})) == 1);
  CHECK(sc(d4, make_partition({{2, 4}}, VeryEvenTag::I)) == 2);
  CHECK(sc(b4, make_partition({{2, 4}, {1, 1}})) == 2);
  CHECK(sc(LieType{Family::B, 3}, make_partition({{3, 1}, {2, 2}})) == 2);
  CHECK(sc(LieType{Family::C, 3}, make_partition({{2, 1}, {1, 4}})) == 2);
  CHECK(sc(LieType{Family::A, 2}, make_partition({{3, 1}})) == 3);
  CHECK(sc(LieType{Family::A, 3}, make_partition({{2, 2}})) == 2);
  CHECK(fundamental_group_order(b3, make_partition({{3, 1}, {1, 4}}), GroupForm::Matrix) == 2);
  CHECK_THROWS_AS(fundamental_group_order(b3, make_partition({{3, 1}, {1, 4}}), GroupForm::Adjoint), Error);
}

TEST_CASE("minimal orbits") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(orbit_dimension(LieType{Family::B, n}, minimal_orbit(LieType{Family::B, n})) == 4 * n - 4);
    CHECK(orbit_dimension(LieType{Family::C, n}, minimal_orbit(LieType{Family::C, n})) == 2 * n);
    CHECK(orbit_dimension(LieType{Family::A, 2 * n - 1}, minimal_orbit(LieType{Family::A, 2 * n - 1})) == 4 * n - 2);
  }
  for (int n = 3; n <= 6; ++n)
    CHECK(orbit_dimension(LieType{Family::D, n + 1}, minimal_orbit(LieType{Family::D, n + 1})) == 4 * n - 2);
}

TEST_CASE("hasse diagrams") {
  const std::string b3 = hasse_dot(LieType{Family::B, 3});
  CHECK(b3.find("digraph nilpotent_orbits_") == 0);
  CHECK(b3.find("\"3,2^2\" -> \"3,1^4\"") != std::string::npos);
  const std::string b1 = hasse_dot(LieType{Family::B, 1});
  int edges = 0;
  for (std::size_t pos = b1.find("->"); pos != std::string::npos; pos = b1.find("->", pos + 1)) ++edges;
  CHECK(edges == 1);
  const std::string d4 = hasse_dot(LieType{Family::D, 4});
  int covers = 0;
  for (std::size_t pos = d4.find("-> \"2^2,1^4\""); pos != std::string::npos; pos = d4.find("-> \"2^2,1^4\"", pos + 1))
    ++covers;
  CHECK(covers == 3);
  CHECK_THROWS_AS(enumerate_orbits(LieType{Family::A, 13}), Error);
}
