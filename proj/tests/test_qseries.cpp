#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "wwlab/closed_forms.hpp"
#include "wwlab/qseries.hpp"
#include "wwlab/series_io.hpp"

using namespace wwlab;

namespace {

const CoeffPoly a = CoeffPoly::var(Var::a);
const CoeffPoly b = CoeffPoly::var(Var::b);
const CoeffPoly c = CoeffPoly::var(Var::c);
const CoeffPoly d = CoeffPoly::var(Var::d);

QSeries S(const char* text) { return parse_series(text); }

QSeries random_series(std::mt19937& rng, std::size_t trunc, bool unit = false) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-1, 2), terms(0, 3);
  std::vector<CoeffPoly> cs(trunc);
  for (std::size_t n = 0; n < trunc; ++n) {
    for (int t = terms(rng); t > 0; --t) {
      Monomial m = Monomial::one();
      for (Var v : kAllVars) m = m * Monomial::of(v, expo(rng));
      cs[n] = cs[n] + CoeffPoly(m) * CoeffPoly(coeff(rng));
    }
  }
  if (unit) cs[0] = CoeffPoly(1);
  return QSeries(trunc, cs);
}

}  // namespace

TEST(CoeffPoly, CanonicalPrinting) {
  EXPECT_EQ(to_text(a + c + d), "a+c+d");
  EXPECT_EQ(to_text(a + c * CoeffPoly(2) + d), "a+2*c+d");
  EXPECT_EQ(to_text(CoeffPoly(0)), "0");
  EXPECT_EQ(to_text(a * d - CoeffPoly(1)), "-1+a*d");
  EXPECT_EQ(to_text(CoeffPoly(Monomial::of(Var::a, -1)) * c), "a^-1*c");
}

TEST(CoeffPoly, ParseRoundTrip) {
  for (const char* text : {"a+2*c+d", "b^2+a*c+a*d+c^2+c*d", "-1+a*d", "a^-1*b*c*d^-1-a^-1*c*d^-1", "0", "7"}) {
    EXPECT_EQ(to_text(parse_coeff_poly(text)), to_text(parse_coeff_poly(to_text(parse_coeff_poly(text))))) << text;
  }
  EXPECT_EQ(parse_coeff_poly("c+a"), a + c);
  EXPECT_THROW(parse_coeff_poly("a+"), std::invalid_argument);
  EXPECT_THROW(parse_coeff_poly("e"), std::invalid_argument);
}

TEST(CoeffPoly, OverflowIsDetected) {
  const CoeffPoly big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + CoeffPoly(1), std::overflow_error);
  EXPECT_THROW(big * CoeffPoly(2), std::overflow_error);
}

TEST(QSeries, ProductOfBinomials) {
  const QSeries x = QSeries::polynomial(3, {{0, 1}, {1, a}});
  const QSeries y = QSeries::polynomial(3, {{0, 1}, {1, d}});
  EXPECT_EQ(x * y, QSeries::polynomial(3, {{0, 1}, {1, a + d}, {2, a * d}}));
  EXPECT_EQ(x + QSeries(3), x);
}

TEST(QSeries, GeometricSeriesTimesOneMinus) {
  for (std::size_t N : {1u, 2u, 7u, 15u}) {
    std::vector<CoeffPoly> geo(N);
    CoeffPoly power(1);
    for (std::size_t n = 0; n < N; ++n, power = power * c) geo[n] = power;
    EXPECT_EQ(one_minus(c, 1, N) * QSeries(N, geo), QSeries::one(N)) << N;
  }
}

TEST(QSeries, InvertUnit) {
  EXPECT_EQ(invert_unit(one_minus(b, 1, 4)), S("1 + (b)*q + (b^2)*q^2 + (b^3)*q^3 + O(q^4)"));
  EXPECT_EQ(invert_unit(QSeries::one(5)), QSeries::one(5));
  const QSeries not_unit = QSeries::polynomial(3, {{0, CoeffPoly(1) - b}, {1, a}});
  EXPECT_THROW(invert_unit(not_unit), SeriesError);
  EXPECT_THROW(divide_unit(QSeries::one(3), one_minus(c, 0, 3)), SeriesError);
}

TEST(QSeries, MismatchedTruncationIsAnError) {
  EXPECT_THROW(QSeries::one(3) + QSeries::one(4), SeriesError);
  EXPECT_THROW(QSeries::one(3) * QSeries::one(4), SeriesError);
  EXPECT_THROW(first_mismatch(QSeries::one(3), QSeries::one(4)), SeriesError);
}

TEST(QSeries, ShiftRules) {
  const QSeries x = QSeries::polynomial(4, {{1, a}, {3, d}});
  EXPECT_EQ(x.shifted(-1), QSeries::polynomial(3, {{0, a}, {2, d}}));
  EXPECT_THROW(QSeries::one(4).shifted(-1), SeriesError);
  EXPECT_EQ(x.times_term(c, 1), QSeries::polynomial(4, {{2, a * c}}));
}

TEST(Pochhammer, SpecExamples) {
  EXPECT_EQ(pochhammer(c, 1, 1, 2, 4), S("1 + (-c)*q + (-c)*q^2 + (c^2)*q^3 + O(q^4)"));
  EXPECT_EQ(pochhammer(-a, 1, 2, std::nullopt, 5), S("1 + (a)*q + (a)*q^3 + (a^2)*q^4 + O(q^5)"));
  EXPECT_EQ(pochhammer(d, 1, 1, 0, 6), QSeries::one(6));
  EXPECT_THROW(pochhammer(d, 0, 1, std::nullopt, 6), std::exception);
}

TEST(Pochhammer, FiniteEqualsRepeatedProduct) {
  for (int start : {0, 1, 3})
    for (int step : {1, 2, 3})
      for (int n = 0; n <= 5; ++n) {
        QSeries expected = QSeries::one(17);
        for (int i = 0; i < n; ++i) expected *= one_minus(a * c, start + i * step, 17);
        EXPECT_EQ(pochhammer(a * c, start, step, n, 17), expected) << start << ' ' << step << ' ' << n;
      }
}

TEST(Substitute, SpecExamples) {
  const QSeries s = QSeries::polynomial(3, {{0, 1}, {1, b + c}});
  EXPECT_EQ(to_text(substitute(s, Substitution{}.set(Var::b, Monomial::of(Var::c)))), "1 + (2*c)*q + O(q^3)");

  const Substitution refine = Substitution{}.dilate(2).set(Var::a, Monomial::of(Var::a), -1).set(Var::d, Monomial::of(Var::d), 1);
  const QSeries ad = QSeries::polynomial(6, {{2, a * d}});
  EXPECT_EQ(substitute(ad, refine), QSeries::polynomial(6, {{4, a * d}}));

  const Substitution bad = Substitution{}.dilate(2).set(Var::a, Monomial::of(Var::a), -1);
  EXPECT_THROW(substitute(QSeries::constant(a, 3), bad), SeriesError);
}

TEST(SeriesIO, TextExamples) {
  EXPECT_EQ(to_text(QSeries(3)), "O(q^3)");
  const QSeries x = QSeries::polynomial(3, {{0, 1}, {1, a + c + d}, {2, a * d}});
  EXPECT_EQ(to_text(x), "1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)");
  EXPECT_EQ(parse_series(to_text(x)), x);
  EXPECT_EQ(series_from_json(to_json(x)), x);
  EXPECT_THROW(parse_series("1 + q"), std::invalid_argument);
}

TEST(Euler, PartialSumMatchesProduct) {
  for (std::size_t N : {1u, 5u, 18u, 31u}) EXPECT_EQ(euler_sum(static_cast<int>(N), N), euler_product(N)) << N;
}

// Ring laws on random series, a hand-rolled property sweep.
TEST(Property, RingLaws) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t N = 1 + static_cast<std::size_t>(trial % 9);
    const QSeries x = random_series(rng, N), y = random_series(rng, N), z = random_series(rng, N);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(Property, InverseOfUnit) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t N = 1 + static_cast<std::size_t>(trial % 8);
    const QSeries u = random_series(rng, N, true), x = random_series(rng, N);
    EXPECT_EQ(invert_unit(u) * u, QSeries::one(N));
    EXPECT_EQ(divide_unit(x, u) * u, x);
  }
}

TEST(Property, TextRoundTrip) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const QSeries x = random_series(rng, 1 + static_cast<std::size_t>(trial % 6));
    EXPECT_EQ(parse_series(to_text(x)), x) << to_text(x);
    EXPECT_EQ(series_from_json(to_json(x)), x);
  }
}
