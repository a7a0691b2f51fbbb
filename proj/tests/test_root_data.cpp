#include "doctest.h"
#include "siltsms/errors.hpp"
#include "siltsms/root_data.hpp"

using namespace siltsms;

TEST_CASE("make_root_datum examples") {
  auto a3 = make_root_datum("A_3");
  CHECK(a3.coxeter_number == 4);
  CHECK(a3.exponents == std::vector<int>{1, 2, 3});
  CHECK(a3.positive_root_count == 6);

  auto a1 = make_root_datum("A_1");
  CHECK(a1.coxeter_number == 2);
  CHECK(a1.exponents == std::vector<int>{1});
  CHECK(a1.positive_root_count == 1);

  auto e6 = make_root_datum("E_6");
  CHECK(e6.coxeter_number == 12);
  CHECK(e6.exponents == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(e6.positive_root_count == 36);

  auto e8 = make_root_datum("e8");
  CHECK(e8.exponents == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("invalid labels") {
  CHECK_THROWS_AS(make_root_datum("D3"), ClassificationError);
  CHECK_THROWS_AS(make_root_datum("E9"), ClassificationError);
  CHECK_THROWS_AS(make_root_datum("B1"), ClassificationError);
  CHECK_THROWS_AS(make_root_datum("X2"), ClassificationError);
  CHECK_THROWS_AS(make_root_datum("A"), ClassificationError);
  CHECK_THROWS_AS(make_root_datum("A0"), ClassificationError);
  CHECK_THROWS_AS(make_root_datum("G3"), ClassificationError);
}

TEST_CASE("fuss_catalan examples") {
  CHECK(fuss_catalan(make_root_datum("A3"), 1, CountVariant::positive) == 5);
  CHECK(fuss_catalan(make_root_datum("A2"), 2, CountVariant::positive) == 7);
  auto a1 = make_root_datum("A1");
  for (int d = 1; d <= 20; ++d) CHECK(fuss_catalan(a1, d, CountVariant::positive) == d);
  CHECK(fuss_catalan(make_root_datum("A2"), 1, CountVariant::full) == 5);
  CHECK(fuss_catalan(make_root_datum("A3"), 1, CountVariant::full) == 14);
  CHECK(fuss_catalan(make_root_datum("D4"), 1, CountVariant::positive) == 20);
  CHECK(fuss_catalan(make_root_datum("D4"), 1, CountVariant::full) == 50);
  CHECK(fuss_catalan(make_root_datum("E6"), 1, CountVariant::positive) == 418);
  CHECK_THROWS(fuss_catalan(a1, 0, CountVariant::positive));
}

TEST_CASE("family_closed_form examples") {
  CHECK(family_closed_form(make_root_datum("A3"), 1, CountVariant::positive) == 5);
  CHECK(family_closed_form(make_root_datum("D4"), 1, CountVariant::positive) == 20);
  CHECK(family_closed_form(make_root_datum("G2"), 3, CountVariant::positive) == 33);
}

TEST_CASE("property: closed forms equal the product for every type, rank <= 8, d <= 12") {
  for (const auto& t : all_types_up_to_rank(8)) {
    auto r = make_root_datum(t);
    for (int d = 1; d <= 12; ++d) {
      CAPTURE(t.label());
      CAPTURE(d);
      CHECK(family_closed_form(r, d, CountVariant::positive) == fuss_catalan(r, d, CountVariant::positive));
      CHECK(family_closed_form(r, d, CountVariant::full) == fuss_catalan(r, d, CountVariant::full));
      CHECK(fuss_catalan(r, d, CountVariant::positive) < fuss_catalan(r, d, CountVariant::full));
    }
  }
}

TEST_CASE("property: classical root counts, exponent sums and Cartan symmetry") {
  for (const auto& t : all_types_up_to_rank(8)) {
    auto r = make_root_datum(t);
    const long n = r.rank;
    long expected = 0;
    switch (t.family) {
      case Family::A: expected = n * (n + 1) / 2; break;
      case Family::B:
      case Family::C: expected = n * n; break;
      case Family::D: expected = n * (n - 1); break;
      case Family::E: expected = n == 6 ? 36 : n == 7 ? 63 : 120; break;
      case Family::F: expected = 24; break;
      case Family::G: expected = 6; break;
    }
    CAPTURE(t.label());
    CHECK(r.positive_root_count == expected);
    long esum = 0;
    for (int e : r.exponents) esum += e;
    CHECK(esum == expected);
    CHECK(static_cast<long>(r.exponents.size()) == n);
    CHECK(static_cast<long>(positive_roots(r).size()) == expected);
    if (r.simply_laced)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(r.cartan[i][j] == r.cartan[j][i]);
  }
}

TEST_CASE("positive roots of B2 and G2") {
  auto b2 = positive_roots(make_root_datum("B2"));
  CHECK(b2.size() == 4);
  auto g2 = positive_roots(make_root_datum("G2"));
  // Highest root of G2 in simple-root coordinates has height 5.
  int height = 0;
  for (int x : g2.back()) height += x;
  CHECK(height == 5);
}
