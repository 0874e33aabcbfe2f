#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wwlab/partition.hpp"
#include "wwlab/qseries.hpp"

namespace wwlab {

/// A contiguous run of series indexed by first_index()..last_index().
class SeriesSequence {
 public:
  explicit SeriesSequence(int first_index) : first_(first_index) {}

  int first_index() const { return first_; }
  int last_index() const { return first_ + static_cast<int>(values_.size()) - 1; }
  const QSeries& at(int k) const;
  void push_back(QSeries s) { values_.push_back(std::move(s)); }

 private:
  int first_;
  std::vector<QSeries> values_;
};

/// Coloured integer k_x, or plain k when colour is empty.
struct ColouredIndex {
  int k = 0;
  std::optional<Colour> colour;
  friend auto operator<=>(const ColouredIndex&, const ColouredIndex&) = default;
};

enum class Family { capparelli_g, capparelli_e, primc_g, primc_e, h };

class GFTable {
 public:
  explicit GFTable(Family f) : family_(f) {}

  Family family() const { return family_; }
  void put(ColouredIndex i, QSeries s) { entries_.insert_or_assign(i, std::move(s)); }
  bool contains(int k, Colour c) const { return entries_.count({k, c}) > 0; }
  /// Throws std::out_of_range for a missing index.
  const QSeries& at(int k, Colour c) const;
  const std::map<ColouredIndex, QSeries>& entries() const { return entries_; }

 private:
  Family family_;
  std::map<ColouredIndex, QSeries> entries_;
};

/// G-series (largest part at most k_x) and E-series (largest part exactly k_x).
struct GFSystem {
  GFTable g;
  GFTable e;
};

/// G^C and E^C for colours a, c, d and 0 <= k <= k_max, plus G^C_{-1_d}.
GFSystem capparelli_system(int k_max, std::size_t trunc);

/// G^P and E^P for colours a, b, c, d and 0 <= k <= k_max, plus G^P_{-1_d}.
/// The self-referential b- and c-equations are solved by dividing by the
/// units 1 - b*q^k and 1 - c*q^k.
GFSystem primc_system(int k_max, std::size_t trunc);

/// Re-evaluates every defining equation of the system in its original,
/// unsolved form. Returns one message per failing equation.
std::vector<std::string> check_capparelli_system(const GFSystem& sys);
std::vector<std::string> check_primc_system(const GFSystem& sys);

/// G^C_{k_d} for -2 <= k <= k_max from the three-term recurrence.
SeriesSequence capparelli_recurrence(int k_max, std::size_t trunc);

/// Cross-multiplied form of the Primc three-term recurrence at k >= 2,
/// checked against G^P_{k_d} from sys. At k = 2 the factor
/// G^P_{-1_d}/(1-b) is replaced by 1.
bool check_primc_recurrence(const GFSystem& sys, int k);

/// H_k for -1 <= k <= k_max. H_{-1}, H_0, H_1 are the closed initial values;
/// later terms divide the recurrence by (1 - c*q^k)(1 - b*q^(k+1)).
SeriesSequence h_sequence(int k_max, std::size_t trunc);

/// H_{-3} = (b-1)*c*q/(a*d).
QSeries h_minus3(std::size_t trunc);

/// (1-cq^k)(1-bq^(k+1))H_k minus the right side of the H recurrence.
QSeries h_recurrence_residual(int k, const QSeries& hk, const QSeries& hk1, const QSeries& hk2, const QSeries& hk3);

/// Checks the H recurrence at k = 0 and k = 1 against H_{-2} = 0 and H_{-3}
/// without dividing by anything. Requires trunc >= 2.
bool check_h_base_cases(std::size_t trunc);

}  // namespace wwlab
