#include "wwlab/bijection.hpp"

#include <algorithm>

namespace wwlab {

namespace {

// Position in 1_a < 1_b < 1_c < 1_d.
int rank(Colour c) { return static_cast<int>(slot(c)); }

// Largest first; within a value d, c, b, a.
ColouredPartition sorted(std::vector<ColouredPart> parts) {
  std::stable_sort(parts.begin(), parts.end(), [](const ColouredPart& x, const ColouredPart& y) {
    if (x.value != y.value) return x.value > y.value;
    return rank(x.colour) > rank(y.colour);
  });
  return ColouredPartition(std::move(parts));
}

void require_stage(const ColouredPartition& p, Stage s, const std::string& what) {
  auto v = validate(p, s);
  if (!v.ok) {
    std::string msg = what + " " + to_string(p) + " fails";
    for (const auto& x : v.violations) msg += " [" + to_string(x) + "]";
    throw BijectionError(msg, std::move(v.violations));
  }
}

void require_colour(const ColouredPartition& p, Colour c, const std::string& what) {
  for (const auto& part : p.parts())
    if (part.colour != c)
      throw BijectionError(what + ": part " + std::to_string(part.value) + std::string(colour_name(part.colour)) +
                               " is not coloured " + std::string(colour_name(c)),
                           {});
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i].value < p[i + 1].value) throw BijectionError(what + ": parts are not non-increasing", {});
}

bool has_a_or_d(const ColouredPartition& p, int m) { return p.contains(m, Colour::a) || p.contains(m, Colour::d); }

}  // namespace

Profile profile(const PartitionPair& pair) {
  return {pair.lambda.weight() + pair.mu.weight(), std::max(pair.lambda.largest(), pair.mu.largest()),
          pair.lambda.count(Colour::a), pair.lambda.count(Colour::c) + static_cast<int>(pair.mu.size()),
          pair.lambda.count(Colour::d)};
}

Profile profile(const ColouredPartition& nu) {
  return {nu.weight(), nu.largest(), nu.count(Colour::a), nu.count(Colour::b) + nu.count(Colour::c),
          nu.count(Colour::d)};
}

EnumSpec stage_spec(Stage s) {
  switch (s) {
    case Stage::insertion: return insertion_stage_spec();
    case Stage::recolour: return recolour_stage_spec();
    case Stage::primc: return primc_spec();
    case Stage::capparelli: return capparelli_spec();
  }
  throw std::logic_error("stage_spec: unknown stage");
}

Validation validate(const ColouredPartition& p, Stage s) {
  Validation v;
  try {
    v.violations = violations(p, stage_spec(s));
  } catch (const std::invalid_argument& e) {
    v.violations.push_back({std::string("colour: ") + e.what(), {}});
  }
  v.ok = v.violations.empty();
  return v;
}

ColouredPartition step0_recolour(const ColouredPartition& mu) {
  require_colour(mu, Colour::c, "step 0");
  std::vector<ColouredPart> parts = mu.parts();
  for (auto& p : parts) p.colour = Colour::b;
  return ColouredPartition(std::move(parts));
}

ColouredPartition step1_insert(const ColouredPartition& lambda, const ColouredPartition& mu_prime) {
  require_stage(lambda, Stage::capparelli, "step 1 input");
  require_colour(mu_prime, Colour::b, "step 1");
  std::vector<ColouredPart> parts = lambda.parts();
  parts.insert(parts.end(), mu_prime.parts().begin(), mu_prime.parts().end());
  ColouredPartition nu1 = sorted(std::move(parts));
  require_stage(nu1, Stage::insertion, "step 1 output");
  return nu1;
}

ColouredPartition step2_recolour_after_ad(const ColouredPartition& nu1) {
  require_stage(nu1, Stage::insertion, "step 2 input");
  std::vector<ColouredPart> parts = nu1.parts();
  for (auto& p : parts)
    if (p.colour == Colour::b && has_a_or_d(nu1, p.value)) p.colour = Colour::c;
  ColouredPartition nu2 = sorted(std::move(parts));
  require_stage(nu2, Stage::recolour, "step 2 output");
  return nu2;
}

ColouredPartition step3_absorb_after_c(const ColouredPartition& nu2) {
  require_stage(nu2, Stage::recolour, "step 3 input");
  std::vector<ColouredPart> parts = nu2.parts();
  for (auto& p : parts)
    if (p.colour == Colour::b && nu2.contains(p.value, Colour::c)) p.colour = Colour::c;
  ColouredPartition nu3 = sorted(std::move(parts));
  require_stage(nu3, Stage::primc, "step 3 output");
  return nu3;
}

ColouredPartition undo_step3(const ColouredPartition& nu3) {
  require_stage(nu3, Stage::primc, "inverse input");
  std::vector<ColouredPart> parts = nu3.parts();
  int current = 0;
  bool kept_first = false;
  for (auto& p : parts) {
    if (p.colour != Colour::c) continue;
    if (p.value != current) {
      current = p.value;
      kept_first = false;
    }
    if (nu3.multiplicity(p.value, Colour::c) < 2 || has_a_or_d(nu3, p.value)) continue;
    if (kept_first) p.colour = Colour::b;
    kept_first = true;
  }
  ColouredPartition nu2 = sorted(std::move(parts));
  require_stage(nu2, Stage::recolour, "inverse step 3 output");
  return nu2;
}

ColouredPartition undo_step2(const ColouredPartition& nu2) {
  std::vector<ColouredPart> parts = nu2.parts();
  for (auto& p : parts)
    if (p.colour == Colour::c && has_a_or_d(nu2, p.value)) p.colour = Colour::b;
  ColouredPartition nu1 = sorted(std::move(parts));
  require_stage(nu1, Stage::insertion, "inverse step 2 output");
  return nu1;
}

PartitionPair undo_step1(const ColouredPartition& nu1) {
  std::vector<ColouredPart> lambda, mu_prime;
  for (const auto& p : nu1.parts()) (p.colour == Colour::b ? mu_prime : lambda).push_back(p);
  PartitionPair out{ColouredPartition(std::move(lambda)), ColouredPartition(std::move(mu_prime))};
  require_stage(out.lambda, Stage::capparelli, "inverse step 1 output");
  return out;
}

ColouredPartition undo_step0(const ColouredPartition& mu_prime) {
  require_colour(mu_prime, Colour::b, "inverse step 0");
  std::vector<ColouredPart> parts = mu_prime.parts();
  for (auto& p : parts) p.colour = Colour::c;
  return ColouredPartition(std::move(parts));
}

BijectionTrace forward(const PartitionPair& pair) {
  BijectionTrace t;
  t.direction = Direction::forward;
  t.pair = pair;
  t.mu_prime = step0_recolour(pair.mu);
  t.nu1 = step1_insert(pair.lambda, t.mu_prime);
  t.nu2 = step2_recolour_after_ad(t.nu1);
  t.nu3 = step3_absorb_after_c(t.nu2);
  return t;
}

BijectionTrace inverse(const ColouredPartition& nu) {
  BijectionTrace t;
  t.direction = Direction::inverse;
  t.nu3 = nu;
  t.nu2 = undo_step3(nu);
  t.nu1 = undo_step2(t.nu2);
  PartitionPair split = undo_step1(t.nu1);
  t.mu_prime = split.mu;
  t.pair = {std::move(split.lambda), undo_step0(t.mu_prime)};
  return t;
}

nlohmann::json to_json(const BijectionTrace& trace) {
  return {{"schema", 1},
          {"direction", trace.direction == Direction::forward ? "forward" : "inverse"},
          {"lambda", to_string(trace.pair.lambda)},
          {"mu", to_string(trace.pair.mu)},
          {"mu_prime", to_string(trace.mu_prime)},
          {"nu1", to_string(trace.nu1)},
          {"nu2", to_string(trace.nu2)},
          {"nu3", to_string(trace.nu3)}};
}

}  // namespace wwlab
