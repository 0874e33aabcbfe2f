#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wwlab/coeff_poly.hpp"

namespace wwlab {

/// Raised on any q-series contract violation: mismatched truncation orders,
/// non-unit divisors, negative q-exponents.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Power series in q with CoeffPoly coefficients, known exactly below q^trunc.
///
/// Values are immutable; every operation returns a new series. Binary
/// operations require equal truncation orders.
class QSeries {
 public:
  /// The zero series O(q^trunc).
  explicit QSeries(std::size_t trunc);
  /// Coefficients past trunc are rejected; missing ones are zero.
  QSeries(std::size_t trunc, std::vector<CoeffPoly> coeffs);

  static QSeries one(std::size_t trunc) { return constant(CoeffPoly(1), trunc); }
  static QSeries constant(const CoeffPoly& c, std::size_t trunc);
  /// c*q^q_exp, or zero if q_exp >= trunc.
  static QSeries term(const CoeffPoly& c, std::size_t q_exp, std::size_t trunc);
  /// Finite sum of terms coeff*q^exp; exponents past trunc are dropped.
  static QSeries polynomial(std::size_t trunc,
                            std::initializer_list<std::pair<std::size_t, CoeffPoly>> terms);

  std::size_t trunc() const { return coeffs_.size(); }
  const CoeffPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const CoeffPoly> coeffs() const { return coeffs_; }
  bool is_zero() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& x, const QSeries& y);
  friend QSeries operator-(const QSeries& x, const QSeries& y);
  friend QSeries operator*(const QSeries& x, const QSeries& y);
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  /// Multiplies every coefficient by c.
  QSeries scaled(const CoeffPoly& c) const;
  /// Multiplies by q^e. A negative e is allowed only when the vacated low
  /// coefficients are zero; the truncation order moves with the shift.
  QSeries shifted(int e) const;
  /// c*q^e times this series, truncated at this->trunc(). e may be negative
  /// under the same condition as shifted().
  QSeries times_term(const CoeffPoly& c, int e) const;
  /// Explicit re-truncation to a lower order.
  QSeries truncated(std::size_t n) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<CoeffPoly> coeffs_;
};

/// t with s*t = 1. The constant coefficient of s must be exactly 1.
QSeries invert_unit(const QSeries& s);

/// num / unit for a unit divisor, by forward substitution (cheap for sparse
/// divisors such as 1 - x*q^e).
QSeries divide_unit(const QSeries& num, const QSeries& unit);

/// The product of (1 - coeff*q^(start_exp + i*step)) over i < n_factors
/// (all i when n_factors is empty), truncated.
QSeries pochhammer(const CoeffPoly& coeff, int start_exp, int step, std::optional<int> n_factors,
                   std::size_t trunc);

/// The binomial 1 - coeff*q^e.
QSeries one_minus(const CoeffPoly& coeff, int e, std::size_t trunc);

/// Image of one colour variable: x -> monomial * q^q_shift.
struct ColourImage {
  Monomial monomial;
  int q_shift = 0;
};

/// Colour specialisation plus an optional global dilation q -> q^q_dilation.
struct Substitution {
  std::array<ColourImage, kVarCount> images{ColourImage{Monomial::of(Var::a)}, ColourImage{Monomial::of(Var::b)},
                                            ColourImage{Monomial::of(Var::c)}, ColourImage{Monomial::of(Var::d)}};
  int q_dilation = 1;

  Substitution& set(Var v, Monomial m, int q_shift = 0) {
    images[static_cast<std::size_t>(v)] = {m, q_shift};
    return *this;
  }
  Substitution& dilate(int m) {
    q_dilation = m;
    return *this;
  }
};

/// Rewrites every a^i b^j c^k d^l q^n term under sub. The result keeps the
/// input's truncation order; when some shifts are negative the caller must
/// supply an input long enough that no unknown term can land below it.
/// Throws SeriesError if a rewritten term would carry a negative q-exponent.
QSeries substitute(const QSeries& s, const Substitution& sub);

/// Index of the first differing coefficient, if any. Truncations must match.
std::optional<std::size_t> first_mismatch(const QSeries& x, const QSeries& y);

}  // namespace wwlab
