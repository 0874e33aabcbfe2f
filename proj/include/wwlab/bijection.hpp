#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "wwlab/enumerate.hpp"

namespace wwlab {

/// lambda in the Capparelli family (colours a, c, d); mu any partition with
/// every part coloured c, largest first.
struct PartitionPair {
  ColouredPartition lambda;
  ColouredPartition mu;
  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

/// (weight, largest part, #a, #b + #c, #d).
struct Profile {
  int weight = 0;
  int largest = 0;
  int a = 0;
  int bc = 0;
  int d = 0;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

Profile profile(const PartitionPair& pair);
Profile profile(const ColouredPartition& nu);

enum class Direction { forward, inverse };

/// Every intermediate partition of one run of the map.
struct BijectionTrace {
  Direction direction = Direction::forward;
  PartitionPair pair;
  ColouredPartition mu_prime;
  ColouredPartition nu1;
  ColouredPartition nu2;
  ColouredPartition nu3;
};

/// Conditions that hold between the steps of the map.
enum class Stage {
  insertion,   // matrix M1 with (C1)-(C4), after Step 1
  recolour,    // matrix M2 with (C'1)-(C'3), after Step 2
  primc,       // matrix P, after Step 3
  capparelli,  // matrix C, the lambda side
};

EnumSpec stage_spec(Stage s);

struct Validation {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks every condition of the stage and reports all that fail.
Validation validate(const ColouredPartition& p, Stage s);

/// Raised when an input or intermediate partition fails its stage.
class BijectionError : public std::runtime_error {
 public:
  BijectionError(const std::string& what, std::vector<Violation> v)
      : std::runtime_error(what), violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

ColouredPartition step0_recolour(const ColouredPartition& mu);
ColouredPartition step1_insert(const ColouredPartition& lambda, const ColouredPartition& mu_prime);
ColouredPartition step2_recolour_after_ad(const ColouredPartition& nu1);
ColouredPartition step3_absorb_after_c(const ColouredPartition& nu2);

ColouredPartition undo_step3(const ColouredPartition& nu3);
ColouredPartition undo_step2(const ColouredPartition& nu2);
/// Splits nu1 into (lambda, mu_prime) by separating the b-parts.
PartitionPair undo_step1(const ColouredPartition& nu1);
ColouredPartition undo_step0(const ColouredPartition& mu_prime);

BijectionTrace forward(const PartitionPair& pair);
BijectionTrace inverse(const ColouredPartition& nu);

nlohmann::json to_json(const BijectionTrace& trace);

}  // namespace wwlab
