#include "wwlab/coeff_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wwlab {

namespace detail {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("CoeffPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("CoeffPoly: coefficient overflow");
  return r;
}

}  // namespace detail

namespace {

// Sorts and merges equal monomials, dropping zeros.
void canonicalize(std::vector<CoeffPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return CanonicalOrder{}(x.first, y.first); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::int64_t sum = 0;
    const Monomial m = terms[i].first;
    for (; i < terms.size() && terms[i].first == m; ++i) sum = detail::checked_add(sum, terms[i].second);
    if (sum != 0) terms[out++] = {m, sum};
  }
  terms.resize(out);
}

// Merge of two canonical term lists, with y scaled by sign.
std::vector<CoeffPoly::Term> merge(const std::vector<CoeffPoly::Term>& x,
                                   const std::vector<CoeffPoly::Term>& y, int sign) {
  std::vector<CoeffPoly::Term> out;
  out.reserve(x.size() + y.size());
  CanonicalOrder less;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && less(x[i].first, y[j].first))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || less(y[j].first, x[i].first)) {
      out.emplace_back(y[j].first, sign * y[j].second);
      ++j;
    } else {
      const std::int64_t s = detail::checked_add(x[i].second, sign * y[j].second);
      if (s != 0) out.emplace_back(x[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CoeffPoly::CoeffPoly(std::int64_t constant) {
  if (constant != 0) terms_.emplace_back(Monomial::one(), constant);
}

CoeffPoly::CoeffPoly(Monomial m, std::int64_t coeff) {
  if (coeff != 0) terms_.emplace_back(m, coeff);
}

CoeffPoly CoeffPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  CoeffPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool CoeffPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

std::int64_t CoeffPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return CanonicalOrder{}(t.first, key); });
  return (it != terms_.end() && it->first == m) ? it->second : 0;
}

std::int64_t CoeffPoly::sum_of_coefficients() const {
  std::int64_t s = 0;
  for (const auto& [m, c] : terms_) s = detail::checked_add(s, c);
  return s;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly operator*(const CoeffPoly& x, const CoeffPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.is_monomial()) return x.times_term(y.terms_[0].first, y.terms_[0].second);
  if (x.is_monomial()) return y.times_term(x.terms_[0].first, x.terms_[0].second);
  std::vector<CoeffPoly::Term> prod;
  prod.reserve(x.size() * y.size());
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) prod.emplace_back(mx * my, detail::checked_mul(cx, cy));
  return CoeffPoly::from_terms(std::move(prod));
}

CoeffPoly CoeffPoly::times_term(const Monomial& m, std::int64_t coeff) const {
  if (coeff == 0) return {};
  CoeffPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mx, cx] : terms_) r.terms_.emplace_back(mx * m, detail::checked_mul(cx, coeff));
  // Translation by a monomial preserves CanonicalOrder.
  return r;
}

}  // namespace wwlab
