#include "wwlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wwlab/bijection.hpp"
#include "wwlab/closed_forms.hpp"
#include "wwlab/enumerate.hpp"
#include "wwlab/recurrences.hpp"
#include "wwlab/series_io.hpp"

namespace wwlab {

namespace {

const CoeffPoly kB = CoeffPoly::var(Var::b);
const CoeffPoly kC = CoeffPoly::var(Var::c);

Substitution set_one(std::initializer_list<Var> vars) {
  Substitution s;
  for (Var v : vars) s.set(v, Monomial::one());
  return s;
}

const Substitution kBToC = Substitution{}.set(Var::b, Monomial::of(Var::c));

struct Params {
  int k = 0;
  std::size_t trunc = 20;
  int max_weight = 0;
};

using Check = void (*)(VerificationReport&, const Params&);

std::string join(const std::vector<long>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::vector<long> coefficient_sums(const QSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.sum_of_coefficients());
  return out;
}

void fail(VerificationReport& r, const std::string& what) {
  r.pass = false;
  r.details.push_back("failed: " + what);
}

// ---- per-k checks --------------------------------------------------------

void check_oracle_capparelli(VerificationReport& r, const Params& p) {
  const QSeries oracle = generating_series(capparelli_spec(p.k), p.trunc);
  const GFSystem sys = capparelli_system(p.k, p.trunc);
  const auto failures = check_capparelli_system(sys);
  if (!failures.empty()) fail(r, "system equation " + failures.front());
  compare_into(r, "enumeration vs system", oracle, sys.g.at(p.k, Colour::d)) &&
      compare_into(r, "enumeration vs recurrence", oracle, capparelli_recurrence(p.k, p.trunc).at(p.k));
}

void check_oracle_primc(VerificationReport& r, const Params& p) {
  const QSeries oracle = generating_series(primc_spec(p.k), p.trunc);
  const GFSystem sys = primc_system(p.k, p.trunc);
  const auto failures = check_primc_system(sys);
  if (!failures.empty()) fail(r, "system equation " + failures.front());
  compare_into(r, "enumeration vs system", oracle, sys.g.at(p.k, Colour::d));
}

void check_main(VerificationReport& r, const Params& p) {
  const QSeries gc = capparelli_system(p.k, p.trunc).g.at(p.k, Colour::d);
  const QSeries gp = primc_system(p.k, p.trunc).g.at(p.k, Colour::d);
  const QSeries lhs = divide_unit(gc, pochhammer(kC, 1, 1, p.k, p.trunc));
  compare_into(r, "G^C_k/(cq;q)_k vs G^P_k(b=c)", lhs, substitute(gp, kBToC));
}

void check_cap_h(VerificationReport& r, const Params& p) {
  const QSeries gc = capparelli_recurrence(p.k, p.trunc).at(p.k);
  const QSeries h = h_sequence(p.k, p.trunc).at(p.k);
  compare_into(r, "G^C_k/(cq;q)_{k+1} vs H_k(b=c)", divide_unit(gc, pochhammer(kC, 1, 1, p.k + 1, p.trunc)),
               substitute(h, kBToC));
}

void check_primc_h(VerificationReport& r, const Params& p) {
  const QSeries gp = primc_system(p.k, p.trunc).g.at(p.k, Colour::d);
  const QSeries h = h_sequence(p.k, p.trunc).at(p.k);
  compare_into(r, "G^P_k vs (1-bq^{k+1})H_k", gp, one_minus(kB, p.k + 1, p.trunc) * h);
}

void check_recpri(VerificationReport& r, const Params& p) {
  if (p.k < 2) {
    r.details.push_back("skipped: the recurrence starts at k = 2");
    return;
  }
  if (!check_primc_recurrence(primc_system(p.k, p.trunc), p.k)) fail(r, "cross-multiplied recurrence");
}

void check_h_closed(VerificationReport& r, const Params& p) {
  compare_into(r, "closed sum vs recurrence", h_closed(p.k, p.trunc), h_sequence(p.k, p.trunc).at(p.k));
}

void check_u_closed(VerificationReport& r, const Params& p) {
  compare_into(r, "closed form vs recurrence", u_by_closed_form(p.k, p.trunc).values.at(p.k),
               u_by_recurrence(p.k, p.trunc).values.at(p.k));
}

void check_primc_fini(VerificationReport& r, const Params& p) {
  const QSeries closed = finite_primc(p.k, p.trunc);
  compare_into(r, "closed form vs system", closed, primc_system(p.k, p.trunc).g.at(p.k, Colour::d)) &&
      compare_into(r, "closed form vs enumeration", closed, generating_series(primc_spec(p.k), p.trunc));
}

void check_capa_fini(VerificationReport& r, const Params& p) {
  const QSeries closed = finite_capparelli(p.k, p.trunc);
  compare_into(r, "closed form vs recurrence", closed, capparelli_recurrence(p.k, p.trunc).at(p.k)) &&
      compare_into(r, "closed form vs enumeration", closed, generating_series(capparelli_spec(p.k), p.trunc));
}

void check_primc_fini_b1(VerificationReport& r, const Params& p) {
  const Substitution b1 = set_one({Var::b});
  const QSeries oracle = substitute(generating_series(primc_spec(p.k), p.trunc), b1);
  const QSeries sum = finite_primc_b1(p.k, p.trunc);
  compare_into(r, "b=1 sum vs closed form at b=1", sum, substitute(finite_primc(p.k, p.trunc), b1)) &&
      compare_into(r, "b=1 sum vs enumeration", sum, oracle);
  const auto literal = first_mismatch(finite_primc_b1_literal(p.k, p.trunc), oracle);
  r.details.push_back(literal ? "literal index k+1-j reading: differs from enumeration at q^" + std::to_string(*literal)
                              : "literal index k+1-j reading: agrees with enumeration");
}

void check_capa_fini_b1(VerificationReport& r, const Params& p) {
  const Substitution c1 = set_one({Var::c});
  const QSeries oracle = substitute(generating_series(capparelli_spec(p.k), p.trunc), c1);
  const QSeries sum = finite_capparelli_c1(p.k, p.trunc);
  compare_into(r, "c=1 sum vs closed form at c=1", sum, substitute(finite_capparelli(p.k, p.trunc), c1)) &&
      compare_into(r, "c=1 sum vs enumeration", sum, oracle);
  for (bool keep_c : {true, false}) {
    const auto m = first_mismatch(finite_capparelli_c1_literal(p.k, p.trunc, keep_c), oracle);
    const std::string which = keep_c ? "literal reading with (cq;q^2)_j kept" : "literal reading with c=1";
    r.details.push_back(which + (m ? ": differs from enumeration at q^" + std::to_string(*m) : ": agrees with enumeration"));
  }
}

void check_stabilization(VerificationReport& r, const Params& p) {
  const std::size_t N = p.trunc;
  const QSeries pp = product_primc(N);
  const QSeries pc = product_capparelli(N);
  compare_into(r, "G^P_k(b=1) vs Primc product", substitute(finite_primc(p.k, N), set_one({Var::b})), pp) &&
      compare_into(r, "G^C_k(c=1) vs Capparelli product", substitute(finite_capparelli(p.k, N), set_one({Var::c})),
                   pc) &&
      compare_into(r, "(q;q)_k G^P_k(b=c=1) vs Capparelli product",
                   q_factorial(p.k, N) * substitute(finite_primc(p.k, N), set_one({Var::b, Var::c})), pc);
}

// ---- whole-range checks ----------------------------------------------------

void check_h_base(VerificationReport& r, const Params& p) {
  if (!check_h_base_cases(std::max<std::size_t>(p.trunc, 2))) fail(r, "H recurrence at k = 0 or k = 1");
}

void check_primc_nondil(VerificationReport& r, const Params& p) {
  compare_into(r, "enumeration(b=1) vs product",
               substitute(generating_series(primc_spec(), p.trunc), set_one({Var::b})), product_primc(p.trunc));
}

void check_capa_dou(VerificationReport& r, const Params& p) {
  compare_into(r, "enumeration(c=1) vs product",
               substitute(generating_series(capparelli_spec(), p.trunc), set_one({Var::c})),
               product_capparelli(p.trunc));
}

void check_capa_aag(VerificationReport& r, const Params& p) {
  const std::size_t N = p.trunc;
  const QSeries tilde = product_capparelli_tilde(N);
  const Substitution link = Substitution{}
                                .set(Var::c, Monomial::one())
                                .set(Var::a, Monomial::of(Var::a), 1)
                                .set(Var::d, Monomial::of(Var::b), 1);
  compare_into(r, "enumeration(ct=1) vs product", substitute(generating_series(capparelli_tilde_spec(), N), set_one({Var::c})),
               tilde) &&
      compare_into(r, "Primc product(c=1,a=aq,d=bq) vs product/(q;q)_inf", substitute(product_primc(N), link),
                   divide_unit(tilde, pochhammer(CoeffPoly(1), 1, 1, std::nullopt, N)));
}

void check_euler(VerificationReport& r, const Params& p) {
  compare_into(r, "partial sum vs (-aq;q)_inf", euler_sum(static_cast<int>(p.trunc), p.trunc), euler_product(p.trunc));
}

void check_primc_dilated(VerificationReport& r, const Params& p) {
  const int N = static_cast<int>(p.trunc);
  std::vector<long> counts(p.trunc, 0);
  for_each_member(primc_dil2_spec(), N - 1, [&](const ColouredPartition& x) { ++counts[static_cast<std::size_t>(x.weight())]; });
  const auto oracle = count_ordinary_partitions(N, [](int) { return true; }, false);
  r.details.push_back("coefficients: " + join(counts));
  if (counts != oracle) fail(r, "dilated enumeration vs ordinary partitions " + join(oracle));
  const Substitution refine = Substitution{}
                                  .dilate(2)
                                  .set(Var::a, Monomial::of(Var::a), -1)
                                  .set(Var::d, Monomial::of(Var::d), 1);
  compare_into(r, "dilated enumeration(b=1) vs dilated product",
               substitute(generating_series(primc_dil2_spec(), p.trunc), set_one({Var::b})),
               substitute(product_primc(p.trunc), refine));
}

void check_capa_dilated(VerificationReport& r, const Params& p) {
  const int N = static_cast<int>(p.trunc);
  const EnumSpec dilated = dilate_spec(capparelli_spec(), capparelli_dilation());
  std::vector<long> c_counts(p.trunc, 0);
  for_each_member(dilated, N - 1, [&](const ColouredPartition& x) { ++c_counts[static_cast<std::size_t>(x.weight())]; });
  const Substitution dil = Substitution{}.dilate(3).set(Var::a, Monomial::of(Var::a), -1).set(Var::d, Monomial::of(Var::d), 1);
  const QSeries product_side = substitute(product_capparelli(p.trunc), dil);
  const auto d_counts = coefficient_sums(product_side);
  const auto d_brute = count_ordinary_partitions(N, [](int v) { return v % 6 != 1 && v % 6 != 5; }, true);
  r.details.push_back("C(n): " + join(c_counts));
  if (c_counts != d_counts) fail(r, "C(n) vs product coefficients " + join(d_counts));
  if (d_counts != d_brute) fail(r, "product coefficients vs D(n) " + join(d_brute));
  compare_into(r, "refined C(n;i,j) vs D(n;i,j)", substitute(generating_series(dilated, p.trunc), set_one({Var::c})),
               product_side);
}

void check_comb(VerificationReport& r, const Params& p) {
  const int W = p.max_weight;
  std::vector<std::vector<ColouredPartition>> lambdas(static_cast<std::size_t>(W) + 1);
  for_each_member(capparelli_spec(), W, [&](const ColouredPartition& x) { lambdas[static_cast<std::size_t>(x.weight())].push_back(x); });
  std::vector<std::vector<ColouredPartition>> mus(static_cast<std::size_t>(W) + 1);
  for_each_ordinary_partition(W, [](int) { return true; }, false, [&](const std::vector<int>& parts) {
    std::vector<ColouredPart> cp;
    for (int v : parts) cp.push_back({v, Colour::c});
    ColouredPartition mu(std::move(cp));
    mus[static_cast<std::size_t>(mu.weight())].push_back(std::move(mu));
  });

  std::map<Profile, long> pair_counts, primc_counts;
  long round_trip_failures = 0;
  for (int w1 = 0; w1 <= W; ++w1) {
    for (int w2 = 0; w1 + w2 <= W; ++w2) {
      for (const auto& lambda : lambdas[static_cast<std::size_t>(w1)]) {
        for (const auto& mu : mus[static_cast<std::size_t>(w2)]) {
          const PartitionPair pair{lambda, mu};
          ++pair_counts[profile(pair)];
          const BijectionTrace t = forward(pair);
          if (profile(t.nu3) != profile(pair) || inverse(t.nu3).pair != pair) ++round_trip_failures;
        }
      }
    }
  }
  for_each_member(primc_spec(), W, [&](const ColouredPartition& nu) {
    ++primc_counts[profile(nu)];
    if (forward(inverse(nu).pair).nu3 != nu) ++round_trip_failures;
  });
  std::map<int, std::pair<long, long>> per_weight;
  for (const auto& [prof, n] : primc_counts) {
    per_weight[prof.weight].first += 1;
    per_weight[prof.weight].second += n;
  }
  for (const auto& [w, v] : per_weight)
    r.details.push_back("n=" + std::to_string(w) + " profiles=" + std::to_string(v.first) +
                        " partitions=" + std::to_string(v.second));
  if (pair_counts != primc_counts) fail(r, "profile counts of pairs and of Primc partitions differ");
  if (round_trip_failures) fail(r, std::to_string(round_trip_failures) + " bijection round trips failed");
}

void check_remark(VerificationReport& r, const Params& p) {
  const int W = p.max_weight;
  using Key = std::tuple<int, int, int>;
  std::map<Key, long> primc, tuples;
  for_each_member(primc_spec(), W, [&](const ColouredPartition& nu) {
    ++primc[{nu.weight(), nu.count(Colour::a), nu.count(Colour::d)}];
  });
  // (weight, parts) counts for each tuple component.
  auto tally = [&](const std::function<bool(int)>& keep, bool distinct) {
    std::map<std::pair<int, int>, long> out;
    for_each_ordinary_partition(W, keep, distinct, [&](const std::vector<int>& x) {
      int w = 0;
      for (int v : x) w += v;
      ++out[{w, static_cast<int>(x.size())}];
    });
    return out;
  };
  const auto odd = [](int v) { return v % 2 == 1; };
  const auto distinct_odd = tally(odd, true);
  const auto general = tally([](int) { return true; }, false);
  const auto odd_parts = tally(odd, false);
  for (const auto& [la, na] : distinct_odd)
    for (const auto& [mu, nm] : general)
      for (const auto& [nu, nn] : odd_parts)
        for (const auto& [chi, nc] : distinct_odd) {
          const int w = la.first + mu.first + nu.first + chi.first;
          if (w <= W) tuples[{w, la.second, chi.second}] += na * nm * nn * nc;
        }
  r.details.push_back("profiles (n,i,l) compared: " + std::to_string(primc.size()));
  if (primc != tuples) fail(r, "P(n;i,l) differs from P'(n;i,l)");
}

struct TheoremDef {
  std::string id;
  Check check;
  enum class Range { per_k, per_n, single, weight } range;
  int default_max_weight = 0;
};

const std::vector<TheoremDef>& registry() {
  using R = TheoremDef::Range;
  static const std::vector<TheoremDef> defs{
      {"oracle-capparelli", check_oracle_capparelli, R::per_k},
      {"oracle-primc", check_oracle_primc, R::per_k},
      {"main", check_main, R::per_k},
      {"capH", check_cap_h, R::per_k},
      {"primcH", check_primc_h, R::per_k},
      {"recpri", check_recpri, R::per_k},
      {"h-base", check_h_base, R::single},
      {"h-closed", check_h_closed, R::per_k},
      {"u-closed", check_u_closed, R::per_n},
      {"primc-fini", check_primc_fini, R::per_k},
      {"capa-fini", check_capa_fini, R::per_k},
      {"primc-fini-b1", check_primc_fini_b1, R::per_k},
      {"capa-fini-b1", check_capa_fini_b1, R::per_k},
      {"stabilization", check_stabilization, R::per_k},
      {"primc-nondil", check_primc_nondil, R::single},
      {"capa-dou", check_capa_dou, R::single},
      {"capa-aag", check_capa_aag, R::single},
      {"euler", check_euler, R::single},
      {"primc-dilated", check_primc_dilated, R::single},
      {"capa-dilated", check_capa_dilated, R::single},
      {"comb", check_comb, R::weight, 14},
      {"remark", check_remark, R::weight, 16},
  };
  return defs;
}

unsigned thread_cap(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WWLAB_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, n);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

bool compare_into(VerificationReport& report, const std::string& comparison, const QSeries& lhs, const QSeries& rhs) {
  const auto m = first_mismatch(lhs, rhs);
  if (!m) return true;
  report.pass = false;
  if (!report.mismatch) report.mismatch = Mismatch{comparison, *m, to_text(lhs[*m]), to_text(rhs[*m])};
  return false;
}

std::vector<VerificationReport> verify(const std::string& theorem, const VerifyOptions& options) {
  auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& d) { return d.id == theorem; });
  if (it == registry().end()) throw std::invalid_argument("unknown theorem id '" + theorem + "'");
  const TheoremDef& def = *it;

  std::vector<Params> runs;
  std::vector<std::vector<std::pair<std::string, long>>> labels;
  const std::size_t trunc = options.trunc.value_or(20);
  if (trunc < 1) throw std::invalid_argument("trunc must be >= 1");
  const long trunc_label = static_cast<long>(trunc);
  switch (def.range) {
    case TheoremDef::Range::per_k:
    case TheoremDef::Range::per_n: {
      const bool per_n = def.range == TheoremDef::Range::per_n;
      auto [lo, hi] = options.k_range.value_or(per_n ? std::pair{0, 12} : std::pair{1, 8});
      if (def.id == "stabilization" && !options.k_range) lo = hi = static_cast<int>(trunc);
      if (lo < 0 || hi < lo) throw std::invalid_argument("invalid k range");
      if (def.id == "stabilization" && lo < static_cast<int>(trunc))
        throw std::invalid_argument("stabilization needs k >= trunc");
      for (int k = lo; k <= hi; ++k) {
        runs.push_back({k, trunc, 0});
        labels.push_back({{per_n ? "n" : "k", k}, {"trunc", trunc_label}});
      }
      break;
    }
    case TheoremDef::Range::single:
      runs.push_back({0, trunc, 0});
      labels.push_back({{"trunc", trunc_label}});
      break;
    case TheoremDef::Range::weight: {
      const int w = options.max_weight.value_or(def.default_max_weight);
      if (w < 0) throw std::invalid_argument("max weight must be >= 0");
      runs.push_back({0, trunc, w});
      labels.push_back({{"max-weight", w}});
      break;
    }
  }

  std::vector<VerificationReport> reports(runs.size());
  std::size_t next = 0;
  std::mutex mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= runs.size() || error) return;
        i = next++;
      }
      VerificationReport& r = reports[i];
      r.theorem = def.id;
      r.params = labels[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        def.check(r, runs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        error = std::current_exception();
        return;
      }
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n_threads = std::min<unsigned>(thread_cap(options.threads), static_cast<unsigned>(runs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return reports;
}

std::string to_text(const VerificationReport& r, bool with_timing) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.theorem;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  if (with_timing) out << " elapsed_ms=" << static_cast<long>(r.elapsed_ms);
  if (r.mismatch)
    out << "\n  first mismatch (" << r.mismatch->comparison << ") at q^" << r.mismatch->q_exponent
        << ": lhs=" << r.mismatch->lhs << " rhs=" << r.mismatch->rhs;
  for (const auto& d : r.details) out << "\n  " << d;
  return out.str();
}

nlohmann::json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::json j{{"theorem", r.theorem}, {"params", params}, {"verdict", r.pass ? "pass" : "fail"},
                   {"details", r.details}};
  j["mismatch"] = nullptr;
  if (r.mismatch)
    j["mismatch"] = {{"comparison", r.mismatch->comparison},
                     {"q_exponent", r.mismatch->q_exponent},
                     {"lhs", r.mismatch->lhs},
                     {"rhs", r.mismatch->rhs}};
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

void for_each_ordinary_partition(int max_weight, const std::function<bool(int)>& keep, bool distinct,
                                 const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int cap, int budget) {
    visit(parts);
    for (int v = std::min(cap, budget); v >= 1; --v) {
      if (!keep(v)) continue;
      parts.push_back(v);
      rec(distinct ? v - 1 : v, budget - v);
      parts.pop_back();
    }
  };
  if (max_weight >= 0) rec(max_weight, max_weight);
}

std::vector<long> count_ordinary_partitions(int trunc, const std::function<bool(int)>& keep, bool distinct) {
  std::vector<long> counts(static_cast<std::size_t>(std::max(trunc, 0)), 0);
  for_each_ordinary_partition(trunc - 1, keep, distinct, [&](const std::vector<int>& x) {
    int w = 0;
    for (int v : x) w += v;
    ++counts[static_cast<std::size_t>(w)];
  });
  return counts;
}

}  // namespace wwlab
