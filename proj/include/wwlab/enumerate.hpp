#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wwlab/partition.hpp"
#include "wwlab/qseries.hpp"

namespace wwlab {

/// Minimal value differences between consecutive parts: entry (x, y) bounds
/// value(larger part coloured x) - value(next part coloured y) from below.
class GapMatrix {
 public:
  GapMatrix(std::vector<Colour> alphabet, const std::vector<std::vector<int>>& rows);

  const std::vector<Colour>& colours() const { return alphabet_; }
  bool has(Colour c) const { return index_[static_cast<std::size_t>(c)] >= 0; }
  /// Position of c in the alphabet; throws std::invalid_argument if absent.
  std::size_t index(Colour c) const;
  int operator()(Colour larger, Colour smaller) const {
    return entries_[index(larger) * alphabet_.size() + index(smaller)];
  }

  friend bool operator==(const GapMatrix&, const GapMatrix&) = default;

 private:
  std::vector<Colour> alphabet_;
  std::vector<int> entries_;
  std::array<int, kColourCount> index_{};
};

/// Values admitted for a colour: v ≡ residue (mod modulus).
struct ValueClass {
  int modulus = 1;
  int residue = 0;
  bool admits(int v) const { return ((v - residue) % modulus + modulus) % modulus == 0; }
  friend bool operator==(const ValueClass&, const ValueClass&) = default;
};

/// Non-adjacent condition sets that a gap matrix cannot express.
enum class ExtraConditions {
  none,
  /// (C1)-(C4): the image of inserting b-parts into a Capparelli partition.
  insertion_stage,
  /// (C'1)-(C'3): the image after recolouring b-parts beside a- and d-parts.
  recolour_stage,
};

/// Declarative description of a coloured-partition family.
class EnumSpec {
 public:
  /// Minimum part 1 for every colour, no largest-part bound, no extra conditions.
  explicit EnumSpec(GapMatrix matrix);

  EnumSpec& set_min_part(Colour c, int min);
  EnumSpec& set_max_part(std::optional<int> k);
  EnumSpec& set_value_class(Colour c, ValueClass vc);
  EnumSpec& set_extra(ExtraConditions e) {
    extra_ = e;
    return *this;
  }

  const GapMatrix& matrix() const { return matrix_; }
  const std::vector<Colour>& colours() const { return matrix_.colours(); }
  int min_part(Colour c) const { return min_part_[matrix_.index(c)]; }
  ValueClass value_class(Colour c) const { return classes_[matrix_.index(c)]; }
  std::optional<int> max_part() const { return max_part_; }
  ExtraConditions extra() const { return extra_; }
  /// True if value is an admissible part for colour c, ignoring neighbours.
  bool admits(int value, Colour c) const;
  /// Alphabet sorted so that a colour follows every colour it may sit after
  /// at equal value.
  const std::vector<Colour>& equal_value_order() const { return equal_value_order_; }

 private:
  GapMatrix matrix_;
  std::vector<int> min_part_;
  std::vector<ValueClass> classes_;
  std::optional<int> max_part_;
  ExtraConditions extra_ = ExtraConditions::none;
  std::vector<Colour> equal_value_order_;
};

/// One failed condition and the parts that witness it.
struct Violation {
  std::string condition;
  std::vector<ColouredPart> parts;
};

std::string to_string(const Violation& v);

/// Every violated condition of spec (gap matrix, part bounds, extra set).
/// Throws std::invalid_argument if p uses a colour outside the alphabet.
std::vector<Violation> violations(const ColouredPartition& p, const EnumSpec& spec);
std::vector<Violation> extra_violations(const ColouredPartition& p, ExtraConditions extra);
bool is_member(const ColouredPartition& p, const EnumSpec& spec);

/// Visits every member of weight <= max_weight in ascending lexicographic
/// order of part lists (parts compared by value, then alphabet position),
/// starting with the empty partition.
void for_each_member(const EnumSpec& spec, int max_weight, const std::function<void(const ColouredPartition&)>& visit);
std::vector<ColouredPartition> enumerate(const EnumSpec& spec, int max_weight);

/// Sum over members of weight < trunc of (colour monomial)*q^weight. Uses a
/// transfer recursion on (largest value, colour) when the spec has no extra
/// conditions, and counts the enumeration otherwise.
QSeries generating_series(const EnumSpec& spec, std::size_t trunc);

/// The spec whose members are exactly the dilated members of spec. All maps
/// must share one scale. Throws std::invalid_argument if spec has a largest
/// part bound or extra conditions, or if a dilated gap would be negative.
EnumSpec dilate_spec(const EnumSpec& spec, const DilationRule& rule);

GapMatrix capparelli_matrix();
GapMatrix capparelli_tilde_matrix();
GapMatrix primc_matrix();
GapMatrix primc_dil2_matrix();
GapMatrix insertion_stage_matrix();
GapMatrix recolour_stage_matrix();

EnumSpec capparelli_spec(std::optional<int> max_part = std::nullopt);
/// Colours at, bt, ct with no part 1_at or 1_bt.
EnumSpec capparelli_tilde_spec(std::optional<int> max_part = std::nullopt);
EnumSpec primc_spec(std::optional<int> max_part = std::nullopt);
/// Matrix P_dil2 with a, d odd and b, c even (b, c >= 2, d >= 3).
EnumSpec primc_dil2_spec();
EnumSpec insertion_stage_spec(std::optional<int> max_part = std::nullopt);
EnumSpec recolour_stage_spec(std::optional<int> max_part = std::nullopt);

}  // namespace wwlab
