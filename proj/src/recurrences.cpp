#include "wwlab/recurrences.hpp"

#include <stdexcept>

namespace wwlab {

namespace {

const CoeffPoly kA = CoeffPoly::var(Var::a);
const CoeffPoly kB = CoeffPoly::var(Var::b);
const CoeffPoly kC = CoeffPoly::var(Var::c);
const CoeffPoly kD = CoeffPoly::var(Var::d);
const CoeffPoly kAD = kA * kD;

std::string label(const char* family, int k, Colour c) {
  return std::string(family) + "_" + std::to_string(k) + std::string(colour_name(c));
}

// a*q^k + d*q^k + a*d*q^(2k)
QSeries ad_sum(int k, std::size_t trunc) {
  return QSeries::term(kA + kD, static_cast<std::size_t>(k), trunc) +
         QSeries::term(kAD, static_cast<std::size_t>(2 * k), trunc);
}

}  // namespace

const QSeries& SeriesSequence::at(int k) const {
  if (k < first_ || k > last_index()) throw std::out_of_range("SeriesSequence: index " + std::to_string(k));
  return values_[static_cast<std::size_t>(k - first_)];
}

const QSeries& GFTable::at(int k, Colour c) const {
  auto it = entries_.find({k, c});
  if (it == entries_.end())
    throw std::out_of_range("GFTable: no entry " + std::to_string(k) + std::string(colour_name(c)));
  return it->second;
}

GFSystem capparelli_system(int k_max, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("capparelli_system: trunc must be >= 1");
  GFSystem sys{GFTable(Family::capparelli_g), GFTable(Family::capparelli_e)};
  auto& G = sys.g;
  auto& E = sys.e;
  const QSeries one = QSeries::one(trunc);
  for (Colour x : {Colour::a, Colour::c, Colour::d}) {
    E.put({0, x}, QSeries(trunc));
    G.put({0, x}, one);
  }
  G.put({-1, Colour::d}, one);
  for (int k = 1; k <= k_max; ++k) {
    E.put({k, Colour::a}, G.at(k - 2, Colour::d).times_term(kA, k));
    G.put({k, Colour::a}, G.at(k - 1, Colour::d) + E.at(k, Colour::a));
    E.put({k, Colour::c}, G.at(k - 1, Colour::c).times_term(kC, k));
    G.put({k, Colour::c}, G.at(k, Colour::a) + E.at(k, Colour::c));
    E.put({k, Colour::d}, (E.at(k, Colour::a) + G.at(k - 1, Colour::c)).times_term(kD, k));
    G.put({k, Colour::d}, G.at(k, Colour::c) + E.at(k, Colour::d));
  }
  return sys;
}

std::vector<std::string> check_capparelli_system(const GFSystem& sys) {
  std::vector<std::string> failures;
  const auto& G = sys.g;
  const auto& E = sys.e;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  for (int k = 1; G.contains(k, Colour::d); ++k) {
    expect(G.at(k, Colour::d) - G.at(k, Colour::c) == E.at(k, Colour::d), label("G^C", k, Colour::d));
    expect(E.at(k, Colour::d) == (E.at(k, Colour::a) + G.at(k - 1, Colour::c)).times_term(kD, k),
           label("E^C", k, Colour::d));
    expect(G.at(k, Colour::c) - G.at(k, Colour::a) == E.at(k, Colour::c), label("G^C", k, Colour::c));
    expect(E.at(k, Colour::c) == G.at(k - 1, Colour::c).times_term(kC, k), label("E^C", k, Colour::c));
    expect(G.at(k, Colour::a) - G.at(k - 1, Colour::d) == E.at(k, Colour::a), label("G^C", k, Colour::a));
    expect(E.at(k, Colour::a) == G.at(k - 2, Colour::d).times_term(kA, k), label("E^C", k, Colour::a));
  }
  return failures;
}

GFSystem primc_system(int k_max, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("primc_system: trunc must be >= 1");
  GFSystem sys{GFTable(Family::primc_g), GFTable(Family::primc_e)};
  auto& G = sys.g;
  auto& E = sys.e;
  const QSeries one = QSeries::one(trunc);
  const QSeries one_minus_b = one - QSeries::constant(kB, trunc);
  for (Colour x : {Colour::a, Colour::c, Colour::d}) E.put({0, x}, QSeries(trunc));
  E.put({0, Colour::b}, QSeries::constant(kB, trunc));
  for (Colour x : {Colour::b, Colour::c, Colour::d}) G.put({0, x}, one);
  G.put({0, Colour::a}, one_minus_b);
  G.put({-1, Colour::d}, one_minus_b);
  for (int k = 1; k <= k_max; ++k) {
    E.put({k, Colour::a}, (E.at(k - 1, Colour::b) + G.at(k - 2, Colour::d)).times_term(kA, k));
    G.put({k, Colour::a}, G.at(k - 1, Colour::d) + E.at(k, Colour::a));
    E.put({k, Colour::b}, divide_unit(G.at(k - 1, Colour::d).times_term(kB, k), one_minus(kB, k, trunc)));
    G.put({k, Colour::b}, G.at(k, Colour::a) + E.at(k, Colour::b));
    const QSeries below_c = E.at(k, Colour::a) + G.at(k - 1, Colour::c);
    E.put({k, Colour::c}, divide_unit(below_c.times_term(kC, k), one_minus(kC, k, trunc)));
    G.put({k, Colour::c}, G.at(k, Colour::b) + E.at(k, Colour::c));
    E.put({k, Colour::d}, (E.at(k, Colour::c) + below_c).times_term(kD, k));
    G.put({k, Colour::d}, G.at(k, Colour::c) + E.at(k, Colour::d));
  }
  return sys;
}

std::vector<std::string> check_primc_system(const GFSystem& sys) {
  std::vector<std::string> failures;
  const auto& G = sys.g;
  const auto& E = sys.e;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  for (int k = 1; G.contains(k, Colour::d); ++k) {
    const QSeries c_tail = E.at(k, Colour::c) + E.at(k, Colour::a) + G.at(k - 1, Colour::c);
    expect(G.at(k, Colour::d) - G.at(k, Colour::c) == E.at(k, Colour::d), label("G^P", k, Colour::d));
    expect(E.at(k, Colour::d) == c_tail.times_term(kD, k), label("E^P", k, Colour::d));
    expect(G.at(k, Colour::c) - G.at(k, Colour::b) == E.at(k, Colour::c), label("G^P", k, Colour::c));
    expect(E.at(k, Colour::c) == c_tail.times_term(kC, k), label("E^P", k, Colour::c));
    expect(G.at(k, Colour::b) - G.at(k, Colour::a) == E.at(k, Colour::b), label("G^P", k, Colour::b));
    expect(E.at(k, Colour::b) == (E.at(k, Colour::b) + G.at(k - 1, Colour::d)).times_term(kB, k),
           label("E^P", k, Colour::b));
    expect(G.at(k, Colour::a) - G.at(k - 1, Colour::d) == E.at(k, Colour::a), label("G^P", k, Colour::a));
    expect(E.at(k, Colour::a) == (E.at(k - 1, Colour::b) + G.at(k - 2, Colour::d)).times_term(kA, k),
           label("E^P", k, Colour::a));
  }
  return failures;
}

SeriesSequence capparelli_recurrence(int k_max, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("capparelli_recurrence: trunc must be >= 1");
  SeriesSequence g(-2);
  g.push_back(QSeries(trunc));
  g.push_back(QSeries::one(trunc));
  g.push_back(QSeries::one(trunc));
  for (int k = 1; k <= k_max; ++k) {
    QSeries next = g.at(k - 1) + g.at(k - 1).times_term(kC, k);
    next += ad_sum(k, trunc) * g.at(k - 2);
    const QSeries& g3 = g.at(k - 3);
    next += (g3 - g3.times_term(kC, k - 1)).times_term(kAD, 2 * k - 1);
    g.push_back(std::move(next));
  }
  return g;
}

bool check_primc_recurrence(const GFSystem& sys, int k) {
  if (k < 2) throw std::invalid_argument("check_primc_recurrence: k must be >= 2");
  const auto& G = sys.g;
  const std::size_t trunc = G.at(k, Colour::d).trunc();
  const QSeries bk = one_minus(kB, k, trunc);
  const QSeries bk1 = one_minus(kB, k - 1, trunc);
  const QSeries lhs_common = one_minus(kC, k, trunc) * G.at(k, Colour::d) * bk * bk1;
  const QSeries t1 = (QSeries::one(trunc) - QSeries::term(kB * kC, static_cast<std::size_t>(2 * k), trunc)) *
                     G.at(k - 1, Colour::d) * bk1;
  const QSeries t2 = ad_sum(k, trunc) * G.at(k - 2, Colour::d) * bk;
  if (k == 2) {
    // adq^3 * G^P_{-1_d}/(1-b) with the quotient cancelled to 1.
    const QSeries t3 = QSeries::term(kAD, 3, trunc) * bk * bk1;
    return lhs_common == t1 + t2 + t3;
  }
  const QSeries bk2 = one_minus(kB, k - 2, trunc);
  const QSeries t3 = G.at(k - 3, Colour::d).times_term(kAD, 2 * k - 1) * bk * bk1;
  return lhs_common * bk2 == (t1 + t2) * bk2 + t3;
}

QSeries h_minus3(std::size_t trunc) {
  const CoeffPoly coeff = (kB * kC - kC) * CoeffPoly(Monomial(-1, 0, 0, -1));
  return QSeries::term(coeff, 1, trunc);
}

SeriesSequence h_sequence(int k_max, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("h_sequence: trunc must be >= 1");
  SeriesSequence h(-1);
  const QSeries one = QSeries::one(trunc);
  h.push_back(one);
  if (k_max >= 0) h.push_back(invert_unit(one_minus(kB, 1, trunc)));
  if (k_max >= 1) {
    const QSeries cq = one_minus(kC, 1, trunc);
    const QSeries bq = one_minus(kB, 1, trunc);
    const QSeries bq2 = one_minus(kB, 2, trunc);
    const QSeries first = one - QSeries::term(kB * kC, 2, trunc);
    QSeries h1 = divide_unit(first, cq * bq * bq2) + divide_unit(ad_sum(1, trunc), cq * bq2);
    h.push_back(std::move(h1));
  }
  for (int k = 2; k <= k_max; ++k) {
    QSeries rhs = h.at(k - 1) - h.at(k - 1).times_term(kB * kC, 2 * k);
    rhs += ad_sum(k, trunc) * h.at(k - 2);
    rhs += h.at(k - 3).times_term(kAD, 2 * k - 1);
    h.push_back(divide_unit(rhs, one_minus(kC, k, trunc) * one_minus(kB, k + 1, trunc)));
  }
  return h;
}

QSeries h_recurrence_residual(int k, const QSeries& hk, const QSeries& hk1, const QSeries& hk2, const QSeries& hk3) {
  const std::size_t trunc = hk.trunc();
  const QSeries lhs = one_minus(kC, k, trunc) * one_minus(kB, k + 1, trunc) * hk;
  QSeries rhs = hk1 - hk1.times_term(kB * kC, 2 * k);
  rhs += ad_sum(k, trunc) * hk2;
  rhs += hk3.times_term(kAD, 2 * k - 1);
  return lhs - rhs;
}

bool check_h_base_cases(std::size_t trunc) {
  if (trunc < 2) throw std::invalid_argument("check_h_base_cases: trunc must be >= 2");
  const SeriesSequence h = h_sequence(1, trunc);
  const QSeries zero(trunc);
  const bool k0 = h_recurrence_residual(0, h.at(0), h.at(-1), zero, h_minus3(trunc)).is_zero();
  const bool k1 = h_recurrence_residual(1, h.at(1), h.at(0), h.at(-1), zero).is_zero();
  return k0 && k1;
}

}  // namespace wwlab
