// Acceptance run: one PASS/FAIL line per criterion. Every comparison is an
// exact integer equality of coefficients; the only tolerance is the runtime
// bound of criterion 1.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "wwlab/verify.hpp"

using namespace wwlab;

namespace {

struct Run {
  bool pass = true;
  std::string note;
};

Run run(const std::vector<std::pair<std::string, VerifyOptions>>& checks) {
  Run r;
  for (const auto& [id, options] : checks) {
    for (const auto& report : verify(id, options)) {
      if (!report.pass) {
        r.pass = false;
        if (r.note.empty()) r.note = to_text(report, false);
      }
    }
  }
  return r;
}

VerifyOptions opts(std::optional<std::pair<int, int>> k, std::optional<std::size_t> trunc,
                   std::optional<int> max_weight = std::nullopt) {
  VerifyOptions o;
  o.k_range = k;
  o.trunc = trunc;
  o.max_weight = max_weight;
  return o;
}

}  // namespace

int main() {
  constexpr double kCriterion1Seconds = 60.0;
  const auto k18 = std::pair{1, 8};
  const auto k08 = std::pair{0, 8};

  std::vector<std::pair<std::string, std::function<Run()>>> criteria{
      {"oracle equivalence, k=1..8, trunc=24, under 60 s",
       [&] {
         const auto start = std::chrono::steady_clock::now();
         Run r = run({{"oracle-capparelli", opts(k18, 24)}, {"oracle-primc", opts(k18, 24)}});
         const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         if (s >= kCriterion1Seconds) {
           r.pass = false;
           r.note = "took " + std::to_string(s) + " s";
         }
         return r;
       }},
      {"G^C_k/(cq;q)_k = G^P_k(b=c), k=1..8, trunc=24", [&] { return run({{"main", opts(k18, 24)}}); }},
      {"H_k relations for G^C_k and G^P_k, k=0..8, trunc=24",
       [&] { return run({{"capH", opts(k08, 24)}, {"primcH", opts(k08, 24)}}); }},
      {"finite closed forms, k=1..8, trunc=20; u closed form n<=12",
       [&] {
         return run({{"primc-fini", opts(k18, 20)},
                     {"capa-fini", opts(k18, 20)},
                     {"u-closed", opts(std::pair{0, 12}, 20)}});
       }},
      {"b=1 finite sum, k=1..8; stabilization k>=20 at trunc=20",
       [&] {
         return run({{"primc-fini-b1", opts(k18, 20)}, {"stabilization", opts(std::pair{20, 23}, 20)}});
       }},
      {"profile counts and bijection round trip, n<=14", [&] { return run({{"comb", opts({}, {}, 14)}}); }},
      {"dilated Primc family counts ordinary partitions, n<=20",
       [&] { return run({{"primc-dilated", opts({}, 21)}}); }},
      {"dilated Capparelli C(n)=D(n), n<=30; tilde product at trunc 20",
       [&] { return run({{"capa-dilated", opts({}, 31)}, {"capa-aag", opts({}, 20)}}); }},
      {"Euler expansion at trunc 30", [&] { return run({{"euler", opts({}, 31)}}); }},
      {"P(n;i,l) = P'(n;i,l), n<=16", [&] { return run({{"remark", opts({}, {}, 16)}}); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Run r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << '\n';
    if (!r.pass) {
      ++failures;
      std::cout << "  " << r.note << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}
