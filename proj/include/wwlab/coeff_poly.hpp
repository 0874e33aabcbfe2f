#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wwlab/monomial.hpp"

namespace wwlab {

/// Finite integer combination of Laurent monomials in a, b, c, d.
///
/// Terms are kept sorted in CanonicalOrder with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal. Arithmetic is exact;
/// int64 overflow throws std::overflow_error.
class CoeffPoly {
 public:
  using Term = std::pair<Monomial, std::int64_t>;

  CoeffPoly() = default;
  CoeffPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  CoeffPoly(Monomial m, std::int64_t coeff = 1);  // NOLINT(google-explicit-constructor)

  /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
  static CoeffPoly from_terms(std::vector<Term> terms);

  static CoeffPoly var(Var v, int power = 1) { return CoeffPoly(Monomial::of(v, power)); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True for a single term.
  bool is_monomial() const { return terms_.size() == 1; }

  std::int64_t coefficient(const Monomial& m) const;
  /// Value of the polynomial with every variable set to 1.
  std::int64_t sum_of_coefficients() const;

  CoeffPoly operator-() const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);

  friend CoeffPoly operator+(CoeffPoly x, const CoeffPoly& y) { return x += y; }
  friend CoeffPoly operator-(CoeffPoly x, const CoeffPoly& y) { return x -= y; }
  friend CoeffPoly operator*(const CoeffPoly& x, const CoeffPoly& y);

  /// Multiplies every term by coeff * m.
  CoeffPoly times_term(const Monomial& m, std::int64_t coeff) const;

  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

 private:
  std::vector<Term> terms_;
};

namespace detail {
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
}  // namespace detail

}  // namespace wwlab
