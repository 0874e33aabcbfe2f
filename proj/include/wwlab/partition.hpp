#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wwlab/monomial.hpp"

namespace wwlab {

/// Part colours. The tilde colours of the three-colour Capparelli family
/// share the generating-function variables of their plain namesakes.
enum class Colour : std::uint8_t { a, b, c, d, at, bt, ct };

inline constexpr std::size_t kColourCount = 7;

/// Generating-function variable counting parts of this colour.
constexpr Var slot(Colour c) {
  switch (c) {
    case Colour::a: case Colour::at: return Var::a;
    case Colour::b: case Colour::bt: return Var::b;
    case Colour::c: case Colour::ct: return Var::c;
    case Colour::d: return Var::d;
  }
  return Var::a;
}

/// Serialized name: a, b, c, d, at, bt, ct.
std::string_view colour_name(Colour c);

struct ColouredPart {
  int value = 0;
  Colour colour = Colour::a;

  friend auto operator<=>(const ColouredPart&, const ColouredPart&) = default;
};

/// Finite sequence of coloured parts, largest first.
///
/// Ordering and gap conditions are a property of the governing EnumSpec, not of
/// the container; see is_member().
class ColouredPartition {
 public:
  ColouredPartition() = default;
  explicit ColouredPartition(std::vector<ColouredPart> parts) : parts_(std::move(parts)) {}

  const std::vector<ColouredPart>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const ColouredPart& operator[](std::size_t i) const { return parts_[i]; }

  int weight() const;
  /// 0 for the empty partition.
  int largest() const;
  int count(Colour c) const;
  /// Number of parts equal to value_colour.
  int multiplicity(int value, Colour c) const;
  bool contains(int value, Colour c) const { return multiplicity(value, c) > 0; }
  /// Product of slot variables over all parts.
  Monomial colour_monomial() const;

  friend auto operator<=>(const ColouredPartition&, const ColouredPartition&) = default;

 private:
  std::vector<ColouredPart> parts_;
};

/// `8d+8a+6c`; the empty partition is the empty string.
std::string to_string(const ColouredPartition& p);
/// Inverse of to_string. Throws std::invalid_argument on malformed input.
ColouredPartition parse_partition(std::string_view text);

/// Affine value map k -> scale*k + offset.
struct AffineMap {
  int scale = 1;
  int offset = 0;
  int operator()(int k) const { return scale * k + offset; }
};

using DilationRule = std::map<Colour, AffineMap>;

/// k_a -> (2k-1)_a, k_b -> (2k)_b, k_c -> (2k)_c, k_d -> (2k+1)_d.
DilationRule primc_dilation();
/// k_a -> (3k-1)_a, k_c -> (3k)_c, k_d -> (3k+1)_d: matrix C onto Capparelli's
/// original difference conditions.
DilationRule capparelli_dilation();
/// k_at -> (3k-2)_at, k_bt -> (3k-4)_bt, k_ct -> (3k)_ct.
DilationRule capparelli_tilde_dilation();

/// Rewrites each part's value under its colour's map. Throws
/// std::invalid_argument for a colour missing from the rule, a scale below 1,
/// or a resulting value below 1.
ColouredPartition dilate_partition(const ColouredPartition& p, const DilationRule& rule);

/// k_at -> (k-1)_d, k_bt -> (k-1)_a, k_ct -> k_c.
ColouredPartition relabel_tilde_to_capparelli(const ColouredPartition& p);
/// Inverse of relabel_tilde_to_capparelli.
ColouredPartition relabel_capparelli_to_tilde(const ColouredPartition& p);

}  // namespace wwlab
