#pragma once

#include "wwlab/recurrences.hpp"

namespace wwlab {

enum class Provenance { by_recurrence, by_closed_form };

/// u_0..u_{n_max}, tagged with the route that produced them.
struct USequence {
  Provenance provenance;
  SeriesSequence values;
};

/// u_0 = 1, u_1 = q(b-1)/((1-bq)(1-q)), then the two-step recurrence. Every
/// divisor is a unit for n >= 2.
USequence u_by_recurrence(int n_max, std::size_t trunc);

/// The explicit even/odd finite sums. The l = 0 term of u_{2n} has its
/// (1-b) denominator factor cancelled against the (1-b) prefactor first.
USequence u_by_closed_form(int n_max, std::size_t trunc);

/// m(m-1)/2, zero for m in {0, 1}.
constexpr int binom2(int m) { return m * (m - 1) / 2; }

/// (q;q)_n.
QSeries q_factorial(int n, std::size_t trunc);

/// Sum over 0 <= j <= k+1 of u_j q^binom2(k+1-j)/(q;q)_{k+1-j}. u must cover
/// indices 0..k+1.
QSeries h_closed(int k, const SeriesSequence& u);
QSeries h_closed(int k, std::size_t trunc);

/// (1 - b q^(k+1)) * h_closed(k).
QSeries finite_primc(int k, std::size_t trunc);
/// (cq;q)_{k+1} * h_closed(k) with b := c.
QSeries finite_capparelli(int k, std::size_t trunc);

/// The b = 1 finite Primc sum with the even-index reading
/// (1-q^(k+1)) sum_{j <= (k+1)/2} (-aq;q^2)_j(-dq;q^2)_j q^binom2(k+1-2j)
///   / ((q^2;q^2)_j (cq;q^2)_j (q;q)_{k+1-2j}).
QSeries finite_primc_b1(int k, std::size_t trunc);
/// The same sum with index k+1-j and j <= k/2, exactly as it is usually
/// printed. Kept to report that reading's disagreement.
QSeries finite_primc_b1_literal(int k, std::size_t trunc);

/// G^C_k(q;a,1,d) from the even-index sum with c := 1 throughout.
QSeries finite_capparelli_c1(int k, std::size_t trunc);
/// (q;q)_{k+1} times the literal index-(k+1-j) sum; the (cq;q^2)_j factor
/// keeps c symbolic when keep_c is true and sets c := 1 otherwise.
QSeries finite_capparelli_c1_literal(int k, std::size_t trunc, bool keep_c);

/// (-q;q)_inf (-aq;q^2)_inf (-dq;q^2)_inf.
QSeries product_capparelli(std::size_t trunc);
/// (-q;q)_inf (-a q^2;q^2)_inf (-b q^2;q^2)_inf, the tilde colours at and bt
/// carried by the variables a and b.
QSeries product_capparelli_tilde(std::size_t trunc);
/// (-aq;q^2)_inf (-dq;q^2)_inf / ((q;q)_inf (cq;q^2)_inf).
QSeries product_primc(std::size_t trunc);

/// Sum over n <= n_max of x^n q^binom2(n)/(q;q)_n with x = a*q.
QSeries euler_sum(int n_max, std::size_t trunc);
/// (-aq;q)_inf.
QSeries euler_product(std::size_t trunc);

}  // namespace wwlab
