#include <gtest/gtest.h>

#include "printers.hpp"
#include "wwlab/closed_forms.hpp"
#include "wwlab/enumerate.hpp"
#include "wwlab/series_io.hpp"
#include "wwlab/verify.hpp"

using namespace wwlab;

namespace {

const CoeffPoly a = CoeffPoly::var(Var::a);
const CoeffPoly b = CoeffPoly::var(Var::b);
const CoeffPoly c = CoeffPoly::var(Var::c);
const CoeffPoly d = CoeffPoly::var(Var::d);

Substitution ones(std::initializer_list<Var> vs) {
  Substitution s;
  for (Var v : vs) s.set(v, Monomial::one());
  return s;
}

}  // namespace

TEST(USequence, FirstTerms) {
  const std::size_t N = 10;
  const USequence u = u_by_recurrence(2, N);
  EXPECT_EQ(u.provenance, Provenance::by_recurrence);
  EXPECT_EQ(u.values.at(0), QSeries::one(N));
  const QSeries u1 = divide_unit(QSeries::term(b - CoeffPoly(1), 1, N), one_minus(b, 1, N) * one_minus(CoeffPoly(1), 1, N));
  EXPECT_EQ(u.values.at(1), u1);
  const QSeries u2 = divide_unit(QSeries::polynomial(N, {{0, 1}, {1, a + d}, {2, a * d}}),
                                 one_minus(b, 2, N) * one_minus(c, 1, N)) +
                     divide_unit(QSeries::term(CoeffPoly(1) - b, 2, N), one_minus(b, 2, N) * q_factorial(2, N));
  EXPECT_EQ(u.values.at(2), u2);
}

TEST(USequence, ClosedFormMatchesRecurrence) {
  const USequence closed = u_by_closed_form(12, 18);
  const USequence rec = u_by_recurrence(12, 18);
  EXPECT_EQ(closed.provenance, Provenance::by_closed_form);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(closed.values.at(n), rec.values.at(n)) << n;
}

TEST(HClosed, SmallCases) {
  std::vector<CoeffPoly> geo(12);
  CoeffPoly p(1);
  for (auto& x : geo) x = p, p = p * b;
  EXPECT_EQ(h_closed(0, 12), QSeries(12, geo));
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(h_closed(k, 1), QSeries::one(1)) << k;
  const SeriesSequence h = h_sequence(6, 14);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(h_closed(k, 14), h.at(k)) << k;
}

TEST(FiniteForms, SpecExamples) {
  EXPECT_EQ(to_text(finite_primc(1, 3)), "1 + (a+b+c+d)*q + (a*c+a*d+b^2+c^2+c*d)*q^2 + O(q^3)");
  EXPECT_EQ(to_text(finite_capparelli(1, 3)), "1 + (a+c+d)*q + (a*d)*q^2 + O(q^3)");
}

TEST(FiniteForms, MatchEnumeration) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(finite_primc(k, 14), generating_series(primc_spec(k), 14)) << k;
    EXPECT_EQ(finite_capparelli(k, 14), generating_series(capparelli_spec(k), 14)) << k;
  }
}

TEST(FiniteForms, BOneCorollaries) {
  for (int k = 1; k <= 6; ++k) {
    const QSeries primc_oracle = substitute(generating_series(primc_spec(k), 14), ones({Var::b}));
    EXPECT_EQ(finite_primc_b1(k, 14), primc_oracle) << k;
    // The index k+1-j with j <= floor(k/2) leaves no q^0 term, so that
    // reading cannot be the b = 1 specialisation.
    EXPECT_NE(finite_primc_b1_literal(k, 14), primc_oracle) << k;
    EXPECT_TRUE(finite_primc_b1_literal(k, 14)[0].is_zero());

    const QSeries capa_oracle = substitute(generating_series(capparelli_spec(k), 14), ones({Var::c}));
    EXPECT_EQ(finite_capparelli_c1(k, 14), capa_oracle) << k;
    EXPECT_NE(finite_capparelli_c1_literal(k, 14, true), capa_oracle) << k;
    EXPECT_NE(finite_capparelli_c1_literal(k, 14, false), capa_oracle) << k;
  }
}

TEST(Products, CapparelliLowOrder) {
  // (1+q)(1+q^2)(1+aq)(1+dq) through q^2.
  const QSeries expected = QSeries::polynomial(3, {{0, 1}, {1, CoeffPoly(1) + a + d}, {2, CoeffPoly(1) + a + d + a * d}});
  EXPECT_EQ(product_capparelli(3), expected);
}

TEST(Products, PrimcColourFreePartIsPartitionCounts) {
  // a = c = d = 0 keeps only the colour-free coefficients.
  const QSeries product = product_primc(16);
  std::vector<long> free_terms;
  for (const auto& coeff : product.coeffs()) free_terms.push_back(coeff.coefficient(Monomial::one()));
  EXPECT_EQ(free_terms, count_ordinary_partitions(16, [](int) { return true; }, false));
}

TEST(Products, PrimcSpecialisesToTildeProduct) {
  const std::size_t N = 21;
  const Substitution link = Substitution{}
                                .set(Var::c, Monomial::one())
                                .set(Var::a, Monomial::of(Var::a), 1)
                                .set(Var::d, Monomial::of(Var::b), 1);
  EXPECT_EQ(substitute(product_primc(N), link),
            divide_unit(product_capparelli_tilde(N), pochhammer(CoeffPoly(1), 1, 1, std::nullopt, N)));
}

TEST(Products, Stabilisation) {
  const std::size_t N = 12;
  for (int k = 12; k <= 14; ++k) {
    EXPECT_EQ(substitute(finite_primc(k, N), ones({Var::b})), product_primc(N)) << k;
    EXPECT_EQ(substitute(finite_capparelli(k, N), ones({Var::c})), product_capparelli(N)) << k;
    EXPECT_EQ(q_factorial(k, N) * substitute(finite_primc(k, N), ones({Var::b, Var::c})), product_capparelli(N)) << k;
  }
}

TEST(Binom2, Conventions) {
  EXPECT_EQ(binom2(0), 0);
  EXPECT_EQ(binom2(1), 0);
  EXPECT_EQ(binom2(5), 10);
}
