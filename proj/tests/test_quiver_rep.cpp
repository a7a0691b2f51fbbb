#include "doctest.h"
#include "siltsms/errors.hpp"
#include "siltsms/quiver_rep.hpp"

#include <random>
#include <set>

using namespace siltsms;

namespace {

const Field kQ = Field::rationals();

Quiver quiver_of(const std::string& label) { return Quiver::default_orientation(make_root_datum(label)); }

// Interval modules [i, j] of a linearly oriented A_n.
std::set<std::vector<int>> a_intervals(int n) {
  std::set<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> v(n, 0);
      for (int k = i; k <= j; ++k) v[k] = 1;
      out.insert(v);
    }
  return out;
}

std::vector<Quiver> test_quivers() {
  std::vector<Quiver> qs;
  for (auto l : {"A1", "A2", "A3", "A4", "D4", "E6"}) qs.push_back(quiver_of(l));
  // Alternating A4 and a D4 with the branch vertex a source.
  auto a4 = make_root_datum("A4");
  qs.push_back(Quiver::with_orientation(a4, {{1, 0}, {1, 2}, {3, 2}}));
  auto d4 = make_root_datum("D4");
  qs.push_back(Quiver::with_orientation(d4, {{1, 0}, {1, 2}, {1, 3}}));
  return qs;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS(Quiver(3, {{0, 1}}));
  CHECK_THROWS(Quiver(2, {{0, 0}}));
  CHECK_THROWS(Quiver(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Quiver::with_orientation(make_root_datum("A3"), {{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(Quiver::default_orientation(make_root_datum("B3")), UnsupportedError);
  Quiver q = quiver_of("A3");
  CHECK(q.reaches(0, 2));
  CHECK_FALSE(q.reaches(2, 0));
  CHECK(q.path(0, 2).size() == 2);
  CHECK(q.is_source(0));
  CHECK(q.is_sink(2));
}

TEST_CASE("A2 catalog and the basic examples") {
  Quiver q = quiver_of("A2");
  IndCatalog cat = build_catalog(q, kQ);
  REQUIRE(cat.size() == 3);
  std::set<std::vector<int>> dims;
  for (int i = 0; i < 3; ++i) dims.insert(cat.dim_vector(i));
  CHECK(dims == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});

  Rep p1 = projective_rep(q, 0), s1 = simple_rep(q, 0), s2 = simple_rep(q, 1);
  CHECK(p1.dims == std::vector<int>{1, 1});
  CHECK(hom_basis(kQ, q, p1, s1).dimension == 1);
  CHECK(hom_basis(kQ, q, s1, p1).dimension == 0);
  CHECK(ext1_dim(kQ, q, s1, s2) == 1);
  CHECK(ext1_dim(kQ, q, s2, s1) == 0);
  CHECK(translate(s1, TranslateDirection::tau, cat).dims == std::vector<int>{0, 1});
  CHECK(translate(s2, TranslateDirection::tau_inverse, cat).dims == std::vector<int>{1, 0});
  CHECK(translate(p1, TranslateDirection::tau, cat).is_zero());
  CHECK(translate(projective_rep(q, 1), TranslateDirection::tau, cat).is_zero());

  CHECK(euler_form(q, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(q, {1, 1}, {0, 0}) == 0);
  CHECK(euler_form(q, {1, 1}, {1, 0}) == 1);
  CHECK_THROWS(euler_form(q, {1}, {1, 0}));

  CHECK(cat.is_projective(*cat.find({1, 1})));
  CHECK(cat.is_injective(*cat.find({1, 1})));
  CHECK(cat.is_projective(*cat.find({0, 1})));
  CHECK(cat.is_injective(*cat.find({1, 0})));
}

TEST_CASE("decompose examples") {
  Quiver q = quiver_of("A2");
  IndCatalog cat = build_catalog(q, kQ);
  Rep p1 = projective_rep(q, 0), s2 = simple_rep(q, 1);
  auto parts = decompose(direct_sum(q, {p1, s2}), cat);
  std::set<std::pair<std::vector<int>, int>> got;
  for (auto [id, m] : parts) got.insert({cat.dim_vector(id), m});
  CHECK(got == std::set<std::pair<std::vector<int>, int>>{{{1, 1}, 1}, {{0, 1}, 1}});
  CHECK(decompose(zero_rep(q), cat).empty());

  // Push out the presentation of S_1 along the nonzero Ext class into S_2.
  Rep s1 = simple_rep(q, 0);
  Presentation pres = projective_presentation(kQ, q, s1);
  ExtClasses ext = ext_classes(kQ, q, pres, s2);
  REQUIRE(ext.dimension == 1);
  RepMap into_sum;
  for (int v = 0; v < 2; ++v) {
    Matrix neg = scale(kQ, -1, ext.representatives[0].components[v]);
    into_sum.components.push_back(vconcat(pres.d.components[v], neg));
  }
  Rep middle = cokernel_rep(kQ, q, into_sum, direct_sum(q, {pres.p0, s2}));
  auto mid_parts = decompose(middle, cat);
  REQUIRE(mid_parts.size() == 1);
  CHECK(cat.dim_vector(mid_parts[0].first) == std::vector<int>{1, 1});
  CHECK(mid_parts[0].second == 1);
}

TEST_CASE("catalog sizes and dimension vectors are the positive roots") {
  for (auto [label, size] : std::vector<std::pair<std::string, int>>{{"A1", 1}, {"A3", 6}, {"D4", 12}, {"E6", 36}}) {
    auto datum = make_root_datum(label);
    IndCatalog cat = build_catalog(Quiver::default_orientation(datum), kQ);
    CHECK(cat.size() == size);
    std::set<std::vector<int>> dims, roots;
    for (int i = 0; i < cat.size(); ++i) dims.insert(cat.dim_vector(i));
    for (auto& r : positive_roots(datum)) roots.insert(r);
    CHECK(dims == roots);
  }
  IndCatalog a3 = build_catalog(quiver_of("A3"), kQ);
  std::set<std::vector<int>> dims;
  for (int i = 0; i < a3.size(); ++i) dims.insert(a3.dim_vector(i));
  CHECK(dims == a_intervals(3));
}

TEST_CASE("property: catalog invariants over several quivers") {
  for (const Quiver& q : test_quivers()) {
    IndCatalog cat = build_catalog(q, kQ);
    CAPTURE(q.type()->label());
    const int m = cat.size();
    for (int a = 0; a < m; ++a) {
      CHECK(cat.hom(a, a) == 1);
      CHECK(hom_basis(kQ, q, cat.rep(a), cat.rep(a)).dimension == 1);
      for (int b = 0; b < a; ++b) CHECK(cat.hom(a, b) == 0);
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const auto& da = cat.dim_vector(a);
        const auto& db = cat.dim_vector(b);
        CHECK(cat.hom(a, b) - cat.ext(a, b) == euler_form(q, da, db));
        CHECK(cat.ext(a, b) == ext1_dim(kQ, q, cat.rep(a), cat.rep(b)));
        if (cat.is_projective(a)) CHECK(cat.ext(a, b) == 0);
        if (!cat.is_projective(a)) {
          Rep t = translate(cat.rep(a), TranslateDirection::tau, cat);
          CHECK(cat.ext(a, b) == hom_dim(kQ, q, cat.rep(b), t));
        }
      }
    // tau and tau^- are inverse bijections non-projective <-> non-injective.
    std::set<int> images;
    for (int a = 0; a < m; ++a) {
      Rep t = translate(cat.rep(a), TranslateDirection::tau, cat);
      if (cat.is_projective(a)) {
        CHECK(t.is_zero());
        continue;
      }
      auto id = cat.find(t.dims);
      REQUIRE(id);
      CHECK_FALSE(cat.is_injective(*id));
      images.insert(*id);
      Rep back = translate(t, TranslateDirection::tau_inverse, cat);
      CHECK(back.dims == cat.dim_vector(a));
      auto parts = decompose(t, cat);
      CHECK(parts.size() == 1);
    }
    CHECK(static_cast<int>(images.size()) == m - q.vertex_count());
    for (int a = 0; a < m; ++a)
      if (cat.is_injective(a)) CHECK(translate(cat.rep(a), TranslateDirection::tau_inverse, cat).is_zero());
  }
}

TEST_CASE("property: decompose of random direct sums") {
  std::mt19937 rng(7);
  for (auto label : {"A3", "D4"}) {
    Quiver q = quiver_of(label);
    IndCatalog cat = build_catalog(q, kQ);
    for (int trial = 0; trial < 30; ++trial) {
      std::map<int, int> expected;
      std::vector<Rep> parts;
      const int k = 1 + rng() % 4;
      for (int i = 0; i < k; ++i) {
        int id = rng() % cat.size();
        expected[id] += 1;
        parts.push_back(cat.rep(id));
      }
      auto got = decompose(direct_sum(q, parts), cat);
      std::map<int, int> got_map(got.begin(), got.end());
      CHECK(got_map == expected);
    }
  }
}

TEST_CASE("property: prime field mode agrees with rational mode") {
  for (auto label : {"A4", "D4", "E6"}) {
    Quiver q = quiver_of(label);
    IndCatalog cq = build_catalog(q, kQ);
    IndCatalog cp = build_catalog(q, Field::prime(3));
    REQUIRE(cq.size() == cp.size());
    for (int a = 0; a < cq.size(); ++a) {
      CHECK(cq.dim_vector(a) == cp.dim_vector(a));
      for (int b = 0; b < cq.size(); ++b) {
        CHECK(cq.hom(a, b) == cp.hom(a, b));
        CHECK(cq.ext(a, b) == cp.ext(a, b));
      }
    }
  }
}

TEST_CASE("presentations are exact") {
  for (const Quiver& q : test_quivers()) {
    IndCatalog cat = build_catalog(q, kQ);
    for (int a = 0; a < cat.size(); ++a) {
      const Presentation& p = cat.presentation(a);
      CHECK(is_morphism(kQ, q, p.d, p.p1, p.p0));
      CHECK(is_morphism(kQ, q, p.cover, p.p0, cat.rep(a)));
      CHECK(kernel_rep(kQ, q, p.d, p.p1).is_zero());
      CHECK(cokernel_rep(kQ, q, p.cover, cat.rep(a)).is_zero());
      Rep k = kernel_rep(kQ, q, p.cover, p.p0);
      CHECK(k.dims == p.p1.dims);
      const Copresentation& c = cat.copresentation(a);
      RepMap dc = injective_map(q, c.gens0, c.gens1, c.coeff);
      Rep i0 = injective_sum(q, c.gens0), i1 = injective_sum(q, c.gens1);
      CHECK(is_morphism(kQ, q, dc, i0, i1));
      CHECK(cokernel_rep(kQ, q, dc, i1).is_zero());
      CHECK(kernel_rep(kQ, q, dc, i0).dims == cat.dim_vector(a));
    }
  }
}
