#include "wwlab/qseries.hpp"

#include <string>

namespace wwlab {

namespace {

void require_same_trunc(const QSeries& x, const QSeries& y, const char* op) {
  if (x.trunc() != y.trunc())
    throw SeriesError(std::string(op) + ": truncation orders differ (" + std::to_string(x.trunc()) + " vs " +
                      std::to_string(y.trunc()) + ")");
}

// In-place multiplication by (1 - coeff*q^e), e >= 1.
void mul_binomial_inplace(std::vector<CoeffPoly>& r, const CoeffPoly& coeff, std::size_t e) {
  for (std::size_t n = r.size(); n-- > e;) {
    if (!r[n - e].is_zero()) r[n] -= r[n - e] * coeff;
  }
}

}  // namespace

QSeries::QSeries(std::size_t trunc) : coeffs_(trunc) {}

QSeries::QSeries(std::size_t trunc, std::vector<CoeffPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > trunc) {
    for (std::size_t n = trunc; n < coeffs_.size(); ++n)
      if (!coeffs_[n].is_zero()) throw SeriesError("QSeries: coefficient beyond truncation order");
  }
  coeffs_.resize(trunc);
}

QSeries QSeries::constant(const CoeffPoly& c, std::size_t trunc) { return term(c, 0, trunc); }

QSeries QSeries::term(const CoeffPoly& c, std::size_t q_exp, std::size_t trunc) {
  QSeries s(trunc);
  if (q_exp < trunc) s.coeffs_[q_exp] = c;
  return s;
}

QSeries QSeries::polynomial(std::size_t trunc,
                            std::initializer_list<std::pair<std::size_t, CoeffPoly>> terms) {
  QSeries s(trunc);
  for (const auto& [e, c] : terms)
    if (e < trunc) s.coeffs_[e] += c;
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

QSeries QSeries::operator-() const {
  QSeries r(trunc());
  for (std::size_t n = 0; n < trunc(); ++n) r.coeffs_[n] = -coeffs_[n];
  return r;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
  require_same_trunc(x, y, "add");
  QSeries r = x;
  for (std::size_t n = 0; n < x.trunc(); ++n) r.coeffs_[n] += y.coeffs_[n];
  return r;
}

QSeries operator-(const QSeries& x, const QSeries& y) {
  require_same_trunc(x, y, "sub");
  QSeries r = x;
  for (std::size_t n = 0; n < x.trunc(); ++n) r.coeffs_[n] -= y.coeffs_[n];
  return r;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  require_same_trunc(x, y, "mul");
  const std::size_t N = x.trunc();
  std::vector<std::size_t> nx, ny;
  for (std::size_t n = 0; n < N; ++n) {
    if (!x.coeffs_[n].is_zero()) nx.push_back(n);
    if (!y.coeffs_[n].is_zero()) ny.push_back(n);
  }
  std::vector<std::vector<CoeffPoly::Term>> acc(N);
  for (std::size_t i : nx) {
    for (std::size_t j : ny) {
      if (i + j >= N) break;
      auto& out = acc[i + j];
      for (const auto& [mx, cx] : x.coeffs_[i].terms())
        for (const auto& [my, cy] : y.coeffs_[j].terms())
          out.emplace_back(mx * my, detail::checked_mul(cx, cy));
    }
  }
  QSeries r(N);
  for (std::size_t n = 0; n < N; ++n)
    if (!acc[n].empty()) r.coeffs_[n] = CoeffPoly::from_terms(std::move(acc[n]));
  return r;
}

QSeries QSeries::scaled(const CoeffPoly& c) const {
  QSeries r(trunc());
  if (c.is_zero()) return r;
  for (std::size_t n = 0; n < trunc(); ++n)
    if (!coeffs_[n].is_zero()) r.coeffs_[n] = coeffs_[n] * c;
  return r;
}

QSeries QSeries::shifted(int e) const {
  if (e >= 0) {
    QSeries r(trunc() + static_cast<std::size_t>(e));
    for (std::size_t n = 0; n < trunc(); ++n) r.coeffs_[n + static_cast<std::size_t>(e)] = coeffs_[n];
    return r;
  }
  const auto k = static_cast<std::size_t>(-e);
  if (k > trunc()) throw SeriesError("shift: series shorter than the negative shift");
  for (std::size_t n = 0; n < k; ++n)
    if (!coeffs_[n].is_zero()) throw SeriesError("shift: would produce a negative q-exponent");
  QSeries r(trunc() - k);
  for (std::size_t n = k; n < trunc(); ++n) r.coeffs_[n - k] = coeffs_[n];
  return r;
}

QSeries QSeries::times_term(const CoeffPoly& c, int e) const {
  QSeries r(trunc());
  for (std::size_t n = 0; n < trunc(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    const long target = static_cast<long>(n) + e;
    if (target < 0) throw SeriesError("times_term: would produce a negative q-exponent");
    if (static_cast<std::size_t>(target) >= trunc()) break;
    r.coeffs_[static_cast<std::size_t>(target)] = coeffs_[n] * c;
  }
  return r;
}

QSeries QSeries::truncated(std::size_t n) const {
  if (n > trunc()) throw SeriesError("truncated: cannot raise the truncation order");
  return QSeries(n, std::vector<CoeffPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

QSeries divide_unit(const QSeries& num, const QSeries& unit) {
  require_same_trunc(num, unit, "divide_unit");
  const std::size_t N = num.trunc();
  if (N == 0) return num;
  if (!unit[0].is_one()) throw SeriesError("divide_unit: constant term of the divisor is not 1");
  std::vector<std::size_t> nz;
  for (std::size_t k = 1; k < N; ++k)
    if (!unit[k].is_zero()) nz.push_back(k);
  std::vector<CoeffPoly> t(N);
  for (std::size_t n = 0; n < N; ++n) {
    std::vector<CoeffPoly::Term> acc(num[n].terms());
    for (std::size_t k : nz) {
      if (k > n) break;
      const CoeffPoly& prev = t[n - k];
      for (const auto& [mu, cu] : unit[k].terms())
        for (const auto& [mt, ct] : prev.terms()) acc.emplace_back(mu * mt, -detail::checked_mul(cu, ct));
    }
    t[n] = CoeffPoly::from_terms(std::move(acc));
  }
  return QSeries(N, std::move(t));
}

QSeries invert_unit(const QSeries& s) { return divide_unit(QSeries::one(s.trunc()), s); }

QSeries one_minus(const CoeffPoly& coeff, int e, std::size_t trunc) {
  if (e < 0) throw SeriesError("one_minus: negative q-exponent");
  QSeries r = QSeries::one(trunc);
  return r - QSeries::term(coeff, static_cast<std::size_t>(e), trunc);
}

QSeries pochhammer(const CoeffPoly& coeff, int start_exp, int step, std::optional<int> n_factors,
                   std::size_t trunc) {
  if (start_exp < 0) throw SeriesError("pochhammer: negative start exponent");
  if (step < 1) throw SeriesError("pochhammer: step must be positive");
  if (!n_factors && start_exp == 0) throw SeriesError("pochhammer: infinite product needs start exponent >= 1");
  if (n_factors && *n_factors < 0) throw SeriesError("pochhammer: negative factor count");

  std::vector<CoeffPoly> r(trunc);
  if (trunc == 0) return QSeries(0);
  r[0] = CoeffPoly(1);
  for (long i = 0; !n_factors || i < *n_factors; ++i) {
    const long e = start_exp + i * step;
    if (e >= static_cast<long>(trunc)) break;
    if (e == 0) {
      const CoeffPoly factor = CoeffPoly(1) - coeff;
      for (auto& c : r) c = c * factor;
    } else {
      mul_binomial_inplace(r, coeff, static_cast<std::size_t>(e));
    }
  }
  return QSeries(trunc, std::move(r));
}

QSeries substitute(const QSeries& s, const Substitution& sub) {
  if (sub.q_dilation < 1) throw SeriesError("substitute: q-dilation must be >= 1");
  const std::size_t N = s.trunc();
  std::vector<std::vector<CoeffPoly::Term>> acc(N);
  for (std::size_t n = 0; n < N; ++n) {
    for (const auto& [m, c] : s[n].terms()) {
      long e = static_cast<long>(n) * sub.q_dilation;
      Monomial image = Monomial::one();
      for (Var v : kAllVars) {
        const int p = m[v];
        if (p == 0) continue;
        const auto& img = sub.images[static_cast<std::size_t>(v)];
        e += static_cast<long>(p) * img.q_shift;
        image = image * img.monomial.pow(p);
      }
      if (e < 0) throw SeriesError("substitute: rewritten term has a negative q-exponent");
      if (static_cast<std::size_t>(e) < N) acc[static_cast<std::size_t>(e)].emplace_back(image, c);
    }
  }
  std::vector<CoeffPoly> out(N);
  for (std::size_t n = 0; n < N; ++n) out[n] = CoeffPoly::from_terms(std::move(acc[n]));
  return QSeries(N, std::move(out));
}

std::optional<std::size_t> first_mismatch(const QSeries& x, const QSeries& y) {
  require_same_trunc(x, y, "compare");
  for (std::size_t n = 0; n < x.trunc(); ++n)
    if (x[n] != y[n]) return n;
  return std::nullopt;
}

}  // namespace wwlab
