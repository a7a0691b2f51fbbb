#include "doctest.h"
#include "siltsms/orbit_cat.hpp"

#include <random>
#include <set>

using namespace siltsms;

namespace {

std::shared_ptr<const DerivedCategory> derived_for(const std::string& label) {
  auto q = Quiver::default_orientation(make_root_datum(label));
  auto cat = std::make_shared<const IndCatalog>(build_catalog(q, Field::rationals()));
  return std::make_shared<const DerivedCategory>(cat);
}

// Brute-force orbit sum over a fixed range of generator powers.
long brute_orbit(const OrbitCategory& oc, Stalk x, Stalk y, int l, int range) {
  long s = 0;
  for (int k = -range; k <= range; ++k) s += oc.derived().graded_hom(x, oc.generator(y, k), l);
  return s;
}

}  // namespace

TEST_CASE("fundamental domain examples") {
  CHECK(OrbitCategory(derived_for("A2"), Ambient::minus, 2).size() == 7);
  OrbitCategory a1(derived_for("A1"), Ambient::minus, 3);
  CHECK(a1.domain() == std::vector<Stalk>{{0, 0}, {0, 1}, {0, 2}});
  OrbitCategory a2p(derived_for("A2"), Ambient::plus, 1);
  REQUIRE(a2p.size() == 5);
  int shifted = 0;
  for (const auto& s : a2p.domain())
    if (s.shift == 1) {
      ++shifted;
      CHECK(a2p.derived().catalog().is_projective(s.ind));
    }
  CHECK(shifted == 2);
}

TEST_CASE("property: domains match their explicit descriptions") {
  for (auto label : {"A1", "A2", "A3", "A4", "D4"}) {
    auto dc = derived_for(label);
    const auto& cat = dc->catalog();
    for (int d = 1; d <= 3; ++d) {
      std::set<Stalk> minus, plus;
      for (int i = 0; i < cat.size(); ++i) {
        for (int s = 0; s < d; ++s) {
          minus.insert({i, s});
          plus.insert({i, s});
        }
        if (!cat.is_injective(i)) minus.insert({i, d});
        if (cat.is_projective(i)) plus.insert({i, d});
      }
      OrbitCategory om(dc, Ambient::minus, d), op(dc, Ambient::plus, d);
      CHECK(std::set<Stalk>(om.domain().begin(), om.domain().end()) == minus);
      CHECK(std::set<Stalk>(op.domain().begin(), op.domain().end()) == plus);
    }
  }
}

TEST_CASE("projection examples") {
  auto dc = derived_for("A2");
  OrbitCategory oc(dc, Ambient::minus, 1);
  for (const auto& s : oc.domain()) CHECK(oc.project(s) == s);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Stalk x{static_cast<int>(rng() % 3), static_cast<int>(rng() % 7) - 3};
    Stalk y = dc->nakayama(x, NakayamaDirection::nu);
    y.shift += 1;
    CHECK(oc.project(y) == oc.project(x));
  }
  OrbitCategory a1(derived_for("A1"), Ambient::minus, 2);
  CHECK(a1.project(Stalk{0, 5}) == Stalk{0, 1});
  CHECK(a1.project(Stalk{0, -3}) == Stalk{0, 1});
}

TEST_CASE("orbit Hom examples") {
  auto dc = derived_for("A2");
  OrbitCategory oc(dc, Ambient::minus, 1);
  const auto& cat = dc->catalog();
  Stalk s1{*cat.find({1, 0}), 0}, s2{*cat.find({0, 1}), 0};
  // Both terms of the two-term formula vanish here: Hom(S1, S2) = 0 = Hom(S2, S1[-1]).
  CHECK(oc.orbit_hom(s1, s2, 0) == 0);
  CHECK(brute_orbit(oc, s1, s2, 0, 4) == 0);
  CHECK(dc->graded_hom(s1, s2, 0) + dc->graded_hom(s2, s1, -1) == 0);
  CHECK(oc.orbit_hom(s1, s2, 1) == 1);
  CHECK(brute_orbit(oc, s1, s2, 1, 4) == 1);
  for (int i = 0; i < oc.size(); ++i) CHECK(oc.orbit_hom(i, i, 0) >= 1);

  for (int d = 1; d <= 4; ++d) {
    OrbitCategory a1(derived_for("A1"), Ambient::minus, d);
    for (int j = 0; j < 2 * d; ++j) CHECK(a1.orbit_hom(Stalk{0, 0}, Stalk{0, -j}, 0) == (j % d == 0 ? 1 : 0));
  }
}

TEST_CASE("property: truncated sums agree with brute force; CY identities; projection constant on orbits") {
  for (auto label : {"A2", "A3", "D4"}) {
    auto dc = derived_for(label);
    for (int d = 1; d <= 3; ++d)
      for (Ambient amb : {Ambient::minus, Ambient::plus}) {
        OrbitCategory oc(dc, amb, d);
        CAPTURE(label);
        CAPTURE(d);
        const int cy = oc.cy_dimension();
        for (int x = 0; x < oc.size(); ++x) {
          for (int y = 0; y < oc.size(); ++y) {
            CHECK(oc.orbit_hom(x, y, cy) == oc.orbit_hom(y, x, 0));
            for (int l = -d - 2; l <= d + 2; ++l)
              CHECK(oc.orbit_hom(x, y, l) == brute_orbit(oc, oc.domain()[x], oc.domain()[y], l, 12));
          }
          for (int k = -3; k <= 3; ++k) CHECK(oc.project_index(oc.generator(oc.domain()[x], k)) == x);
        }
      }
  }
}

TEST_CASE("two-term formula on the minus domain") {
  for (auto label : {"A2", "A3"}) {
    auto dc = derived_for(label);
    for (int d = 1; d <= 3; ++d) {
      OrbitCategory oc(dc, Ambient::minus, d);
      for (const auto& x : oc.domain())
        for (const auto& y : oc.domain())
          for (int i = 0; i <= d; ++i)
            CHECK(oc.orbit_hom(x, y, -i) == dc->graded_hom(x, y, -i) + dc->graded_hom(y, x, i - d));
    }
  }
}

TEST_CASE("orbit AR quiver and census export") {
  OrbitCategory oc(derived_for("A3"), Ambient::plus, 1);
  auto dot = oc.ar_quiver_dot();
  CHECK(dot.find("digraph") == 0);
  auto j = oc.census_json();
  CHECK(j["size"] == 9);
  CHECK(j["ambient"] == "plus");
}
