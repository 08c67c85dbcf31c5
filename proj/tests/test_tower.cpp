#include "limitmult/tower.hpp"

#include "limitmult/cusp_dimensions.hpp"
#include "limitmult/errors.hpp"
#include "limitmult/vn_dimension.hpp"

#include <doctest.h>

using namespace limitmult;

namespace {

SpectralWindow atom_window(int weight, Sign sign = Sign::Plus) {
  SpectralWindow w;
  w.add_atom({weight, sign});
  return w;
}

}  // namespace

TEST_CASE("exact ratio spot values") {
  CHECK(ratio_exact(12, 12) == Rational(21, 22));
  CHECK(ratio_exact(7, 3) == Rational(4, 7));
  CHECK(ratio_exact(96, 12) == Rational(1) - Rational(1, 176));
}

TEST_CASE("ratio equals the independent multiplicity / dimension quotient") {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  for (int n = 3; n <= 30; ++n) {
    for (int k = 3; k <= 12; ++k) {
      Int m = multiplicity_atom(weight_level(k, n));
      MeasureValue dim = vn_dimension(lattice(Ambient::SL2R, n), model, atom_window(k));
      Rational quotient = Rational(m) / dim.exact_value().coeff();
      CHECK(quotient == ratio_exact(n, k));
    }
  }
}

TEST_CASE("gap law 6/(N(k-1))") {
  for (int n : {3, 7, 12, 48, 96}) {
    for (int k : {3, 5, 12, 24}) {
      CHECK(Rational(1) - ratio_exact(n, k) == Rational(6, Int(n) * (k - 1)));
    }
  }
}

TEST_CASE("ratio regime gates") {
  CHECK_THROWS_AS(ratio_exact(2, 12), UnsupportedRegimeError);
  CHECK_THROWS_AS(ratio_exact(7, 2), UnsupportedRegimeError);
}

TEST_CASE("ratio table along a divisibility tower") {
  std::vector<RatioRow> rows = ratio_table({3, 6, 12}, atom_window(12));
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].level == 3);
  CHECK(rows[0].index == 24);
  CHECK(rows[0].multiplicity == 9);
  CHECK(rows[0].vn_dim == Rational(11));
  CHECK(rows[0].ratio == Rational(9, 11));
  CHECK(rows[0].gap == Rational(2, 11));

  CHECK(rows[1].multiplicity == 60);
  CHECK(rows[1].vn_dim == Rational(66));
  CHECK(rows[1].gap == Rational(1, 11));

  CHECK(rows[2].multiplicity == 504);
  CHECK(rows[2].vn_dim == Rational(528));
  CHECK(rows[2].gap == Rational(1, 22));

  // Gap follows the closed form and strictly decreases.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].gap == Rational(6, rows[i].level * 11));
    if (i > 0) CHECK(rows[i].gap < rows[i - 1].gap);
  }
}

TEST_CASE("single-level towers are fine") {
  std::vector<RatioRow> rows = ratio_table({5}, atom_window(4));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ratio == ratio_exact(5, 4));
}

TEST_CASE("sign pairs scale numerator and denominator together") {
  SpectralWindow both;
  both.add_atom({4, Sign::Plus});
  both.add_atom({4, Sign::Minus});
  std::vector<RatioRow> rows = ratio_table({3, 9, 27}, both);
  for (const RatioRow& row : rows) {
    CHECK(row.ratio == ratio_exact(row.level, 4));
  }
}

TEST_CASE("ratio table input validation") {
  CHECK_THROWS_AS(ratio_table({4, 6}, atom_window(12)), InvalidInputError);
  CHECK_THROWS_AS(ratio_table({2, 4}, atom_window(12)), UnsupportedRegimeError);
  CHECK_THROWS_AS(ratio_table({3, 6}, SpectralWindow{}), InvalidInputError);
  CHECK_THROWS_AS(ratio_table({3, 6}, atom_window(2)), UnsupportedRegimeError);

  SpectralWindow continuous;
  continuous.add_atom({12, Sign::Plus});
  continuous.add_interval({SeriesType::Even, 0.0, 1.0});
  CHECK_THROWS_AS(ratio_table({3, 6}, continuous), UnsupportedRegimeError);
}

TEST_CASE("threshold levels") {
  CHECK(threshold_level(12, Rational(1, 1000)) == 546);
  CHECK(threshold_level(12, Rational(1)) == 3);
  CHECK(threshold_level(3, Rational(1, 100)) == 301);
  // Exact boundary: 6/(N(k-1)) < eps must be strict. With k = 7, eps = 1/100,
  // N = 100 gives exactly eps, so the threshold is 101.
  CHECK(threshold_level(7, Rational(1, 100)) == 101);
  CHECK_THROWS_AS(threshold_level(2, Rational(1, 10)), UnsupportedRegimeError);
  CHECK_THROWS_AS(threshold_level(12, Rational(0)), InvalidInputError);
}

TEST_CASE("threshold is consistent with the gap law") {
  for (int k : {3, 5, 12}) {
    for (const Rational& eps : {Rational(1, 50), Rational(1, 777), Rational(3, 1000)}) {
      Int n = threshold_level(k, eps);
      CHECK(Rational(6, n * (k - 1)) < eps);
      if (n > 3) {
        CHECK(Rational(6, (n - 1) * (k - 1)) >= eps);
      }
    }
  }
}

TEST_CASE("empirical measure rows carry the exact 3/(2N pi) gap") {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  std::vector<EmpiricalMeasureRow> rows =
      empirical_measure_table({3, 6, 12, 24}, atom_window(12), model);
  REQUIRE(rows.size() == 4);
  for (const EmpiricalMeasureRow& row : rows) {
    REQUIRE(row.gap.is_exact());
    CHECK(row.gap.exact_value() ==
          ExactScalar(Rational(3, 2 * row.level), -1));
    CHECK(row.empirical.pi_exp() == -1);
    CHECK(row.limit == ExactScalar(Rational(11, 4), -1));
  }
  // Monotone decay along the tower.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].gap.exact_value().coeff() < rows[i - 1].gap.exact_value().coeff());
  }
}

TEST_CASE("the empirical gap does not depend on the weight") {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  ExactScalar expected(Rational(3, 14), -1);
  for (int k = 3; k <= 24; ++k) {
    std::vector<EmpiricalMeasureRow> rows =
        empirical_measure_table({7}, atom_window(k), model);
    CHECK(rows[0].gap.exact_value() == expected);
  }
}

TEST_CASE("empirical rows sum per atom") {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  SpectralWindow both;
  both.add_atom({12, Sign::Plus});
  both.add_atom({12, Sign::Minus});
  std::vector<EmpiricalMeasureRow> rows = empirical_measure_table({5}, both, model);
  CHECK(rows[0].gap.exact_value() == ExactScalar(Rational(2 * 3, 2 * 5), -1));
}
