#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace wwlab {

/// The four colour variables every series coefficient lives in.
enum class Var : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

inline constexpr std::size_t kVarCount = 4;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::a, Var::b, Var::c, Var::d};

constexpr char var_letter(Var v) { return "abcd"[static_cast<std::size_t>(v)]; }

/// Laurent monomial a^i b^j c^k d^l, identified by its exponent vector.
class Monomial {
 public:
  using Exponents = std::array<int, kVarCount>;

  constexpr Monomial() = default;
  constexpr explicit Monomial(Exponents e) : exps_(e) {}
  constexpr Monomial(int i, int j, int k, int l) : exps_{i, j, k, l} {}

  static constexpr Monomial one() { return Monomial{}; }
  static constexpr Monomial of(Var v, int power = 1) {
    Monomial m;
    m.exps_[static_cast<std::size_t>(v)] = power;
    return m;
  }

  constexpr int operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  constexpr const Exponents& exponents() const { return exps_; }

  constexpr bool is_one() const { return exps_ == Exponents{}; }

  constexpr int total_degree() const { return exps_[0] + exps_[1] + exps_[2] + exps_[3]; }

  constexpr Monomial operator*(const Monomial& o) const {
    return Monomial{exps_[0] + o.exps_[0], exps_[1] + o.exps_[1], exps_[2] + o.exps_[2],
                    exps_[3] + o.exps_[3]};
  }
  constexpr Monomial inverse() const { return Monomial{-exps_[0], -exps_[1], -exps_[2], -exps_[3]}; }
  constexpr Monomial pow(int n) const {
    return Monomial{n * exps_[0], n * exps_[1], n * exps_[2], n * exps_[3]};
  }

  constexpr auto operator<=>(const Monomial&) const = default;

 private:
  Exponents exps_{};
};

/// Canonical term order: ascending total degree, then descending lexicographic
/// exponent vector, so that `a+c+d` and `1-c` read naturally.
struct CanonicalOrder {
  constexpr bool operator()(const Monomial& x, const Monomial& y) const {
    const int dx = x.total_degree();
    const int dy = y.total_degree();
    if (dx != dy) return dx < dy;
    return y.exponents() < x.exponents();
  }
};

}  // namespace wwlab
