#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wwlab/qseries.hpp"

namespace wwlab {

struct Mismatch {
  std::string comparison;
  std::size_t q_exponent = 0;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, long>> params;
  bool pass = true;
  std::optional<Mismatch> mismatch;
  /// Extra lines such as count tables or coefficient lists.
  std::vector<std::string> details;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  std::optional<std::pair<int, int>> k_range;
  std::optional<std::size_t> trunc;
  std::optional<int> max_weight;
  /// Upper bound on worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// The closed list of theorem ids accepted by verify().
const std::vector<std::string>& theorem_ids();

/// Runs one check per parameter value, in parameter order. Throws
/// std::invalid_argument for an unknown theorem id.
std::vector<VerificationReport> verify(const std::string& theorem, const VerifyOptions& options);

/// Records the first mismatch between lhs and rhs under the given label.
/// Returns false if one was found.
bool compare_into(VerificationReport& report, const std::string& comparison, const QSeries& lhs, const QSeries& rhs);

std::string to_text(const VerificationReport& r, bool with_timing);
nlohmann::json to_json(const VerificationReport& r, bool with_timing);

/// Visits every ordinary partition of weight <= max_weight whose parts all
/// satisfy keep (pairwise different when distinct), largest part first.
void for_each_ordinary_partition(int max_weight, const std::function<bool(int)>& keep, bool distinct,
                                 const std::function<void(const std::vector<int>&)>& visit);

/// Number of such partitions of each n < trunc.
std::vector<long> count_ordinary_partitions(int trunc, const std::function<bool(int)>& keep, bool distinct);

}  // namespace wwlab
