#include "wwlab/closed_forms.hpp"

#include <stdexcept>

namespace wwlab {

namespace {

const CoeffPoly kA = CoeffPoly::var(Var::a);
const CoeffPoly kB = CoeffPoly::var(Var::b);
const CoeffPoly kC = CoeffPoly::var(Var::c);
const CoeffPoly kD = CoeffPoly::var(Var::d);

QSeries poch(const CoeffPoly& x, int start, int step, int n, std::size_t trunc) {
  return pochhammer(x, start, step, n, trunc);
}

// (-aq^s;q^2)_n (-dq^s;q^2)_n / ((b q^t;q^2)_m (c q^s;q^2)_n) with t and m
// given by the caller; all factors in the denominator must be units.
QSeries u_summand(int s, int n, int t, int m, std::size_t trunc) {
  const QSeries num = poch(-kA, s, 2, n, trunc) * poch(-kD, s, 2, n, trunc);
  const QSeries den = poch(kB, t, 2, m, trunc) * poch(kC, s, 2, n, trunc);
  return divide_unit(num, den);
}

Substitution b_to_c() { return Substitution{}.set(Var::b, Monomial::of(Var::c)); }

QSeries b1_sum(int k, std::size_t trunc, bool literal, bool c_is_one) {
  const CoeffPoly c = c_is_one ? CoeffPoly(1) : kC;
  const int j_max = literal ? k / 2 : (k + 1) / 2;
  QSeries sum(trunc);
  for (int j = 0; j <= j_max; ++j) {
    const int rest = literal ? k + 1 - j : k + 1 - 2 * j;
    const QSeries num = poch(-kA, 1, 2, j, trunc) * poch(-kD, 1, 2, j, trunc);
    const QSeries den = poch(CoeffPoly(1), 2, 2, j, trunc) * poch(c, 1, 2, j, trunc) * q_factorial(rest, trunc);
    sum += divide_unit(num, den).shifted(binom2(rest)).truncated(trunc);
  }
  return sum;
}

}  // namespace

QSeries q_factorial(int n, std::size_t trunc) { return pochhammer(CoeffPoly(1), 1, 1, n, trunc); }

USequence u_by_recurrence(int n_max, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("u_by_recurrence: trunc must be >= 1");
  SeriesSequence u(0);
  u.push_back(QSeries::one(trunc));
  if (n_max >= 1) {
    const QSeries num = QSeries::term(kB - CoeffPoly(1), 1, trunc);
    u.push_back(divide_unit(num, one_minus(kB, 1, trunc) * one_minus(CoeffPoly(1), 1, trunc)));
  }
  for (int n = 2; n <= n_max; ++n) {
    const QSeries bn = one_minus(kB, n, trunc);
    const QSeries step_num = (QSeries::one(trunc) + QSeries::term(kA, static_cast<std::size_t>(n - 1), trunc)) *
                             (QSeries::one(trunc) + QSeries::term(kD, static_cast<std::size_t>(n - 1), trunc));
    QSeries next = divide_unit(step_num * u.at(n - 2), bn * one_minus(kC, n - 1, trunc));
    const CoeffPoly sign = (n % 2 == 0) ? CoeffPoly(1) : CoeffPoly(-1);
    const QSeries inhom = QSeries::term(sign * (CoeffPoly(1) - kB), static_cast<std::size_t>(n), trunc);
    next += divide_unit(inhom, bn * q_factorial(n, trunc));
    u.push_back(std::move(next));
  }
  return {Provenance::by_recurrence, std::move(u)};
}

USequence u_by_closed_form(int n_max, std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("u_by_closed_form: trunc must be >= 1");
  SeriesSequence u(0);
  const QSeries one_minus_b = one_minus(kB, 0, trunc);
  for (int idx = 0; idx <= n_max; ++idx) {
    const int n = idx / 2;
    QSeries sum(trunc);
    if (idx % 2 == 0) {
      // l = 0: (1-b)/(b;q^2)_{n+1} = 1/(bq^2;q^2)_n.
      sum += u_summand(1, n, 2, n, trunc);
      for (int l = 1; l <= n; ++l) {
        const QSeries core = u_summand(2 * l + 1, n - l, 2 * l, n - l + 1, trunc);
        sum += divide_unit(core.shifted(2 * l).truncated(trunc), q_factorial(2 * l, trunc)) * one_minus_b;
      }
    } else {
      for (int l = 0; l <= n; ++l) {
        const QSeries core = u_summand(2 * l + 2, n - l, 2 * l + 1, n - l + 1, trunc);
        sum -= divide_unit(core.shifted(2 * l + 1).truncated(trunc), q_factorial(2 * l + 1, trunc)) * one_minus_b;
      }
    }
    u.push_back(std::move(sum));
  }
  return {Provenance::by_closed_form, std::move(u)};
}

QSeries h_closed(int k, const SeriesSequence& u) {
  if (k < -1) throw std::invalid_argument("h_closed: k must be >= -1");
  const std::size_t trunc = u.at(0).trunc();
  QSeries sum(trunc);
  for (int j = 0; j <= k + 1; ++j) {
    const int rest = k + 1 - j;
    sum += divide_unit(u.at(j).shifted(binom2(rest)).truncated(trunc), q_factorial(rest, trunc));
  }
  return sum;
}

QSeries h_closed(int k, std::size_t trunc) { return h_closed(k, u_by_closed_form(k + 1, trunc).values); }

QSeries finite_primc(int k, std::size_t trunc) { return one_minus(kB, k + 1, trunc) * h_closed(k, trunc); }

QSeries finite_capparelli(int k, std::size_t trunc) {
  return pochhammer(kC, 1, 1, k + 1, trunc) * substitute(h_closed(k, trunc), b_to_c());
}

QSeries finite_primc_b1(int k, std::size_t trunc) {
  return one_minus(CoeffPoly(1), k + 1, trunc) * b1_sum(k, trunc, false, false);
}

QSeries finite_primc_b1_literal(int k, std::size_t trunc) {
  return one_minus(CoeffPoly(1), k + 1, trunc) * b1_sum(k, trunc, true, false);
}

QSeries finite_capparelli_c1(int k, std::size_t trunc) { return q_factorial(k + 1, trunc) * b1_sum(k, trunc, false, true); }

QSeries finite_capparelli_c1_literal(int k, std::size_t trunc, bool keep_c) {
  return q_factorial(k + 1, trunc) * b1_sum(k, trunc, true, !keep_c);
}

QSeries product_capparelli(std::size_t trunc) {
  return pochhammer(CoeffPoly(-1), 1, 1, std::nullopt, trunc) * pochhammer(-kA, 1, 2, std::nullopt, trunc) *
         pochhammer(-kD, 1, 2, std::nullopt, trunc);
}

QSeries product_capparelli_tilde(std::size_t trunc) {
  return pochhammer(CoeffPoly(-1), 1, 1, std::nullopt, trunc) * pochhammer(-kA, 2, 2, std::nullopt, trunc) *
         pochhammer(-kB, 2, 2, std::nullopt, trunc);
}

QSeries product_primc(std::size_t trunc) {
  const QSeries num = pochhammer(-kA, 1, 2, std::nullopt, trunc) * pochhammer(-kD, 1, 2, std::nullopt, trunc);
  const QSeries den = pochhammer(CoeffPoly(1), 1, 1, std::nullopt, trunc) * pochhammer(kC, 1, 2, std::nullopt, trunc);
  return divide_unit(num, den);
}

QSeries euler_sum(int n_max, std::size_t trunc) {
  QSeries sum(trunc);
  for (int n = 0; n <= n_max; ++n) {
    const int e = n + binom2(n);
    if (static_cast<std::size_t>(e) >= trunc) break;
    sum += divide_unit(QSeries::term(CoeffPoly(Monomial::of(Var::a, n)), static_cast<std::size_t>(e), trunc),
                       q_factorial(n, trunc));
  }
  return sum;
}

QSeries euler_product(std::size_t trunc) { return pochhammer(-kA, 1, 1, std::nullopt, trunc); }

}  // namespace wwlab
