// Command-line front end: series, verify, enumerate, dilate, bijection.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wwlab/bijection.hpp"
#include "wwlab/closed_forms.hpp"
#include "wwlab/enumerate.hpp"
#include "wwlab/recurrences.hpp"
#include "wwlab/series_io.hpp"
#include "wwlab/verify.hpp"

namespace {

using namespace wwlab;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int k = std::stoi(text, &used);
      if (used != text.size()) throw UsageError("");
      return {k, k};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw UsageError("");
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw UsageError("");
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("malformed k range '" + text + "' (expected K or LO..HI)");
  }
}

// VAR=EXPR with EXPR a product of colour letters and at most one q power,
// e.g. b=c, a=a*q, d=b*q^-1, c=1.
void apply_set(Substitution& sub, const std::string& text) {
  const auto eq = text.find('=');
  if (eq != 1 || std::string("abcd").find(text[0]) == std::string::npos)
    throw UsageError("malformed substitution '" + text + "' (expected VAR=EXPR, VAR in a,b,c,d)");
  const Var target = static_cast<Var>(std::string("abcd").find(text[0]));
  std::string colour_part;
  int shift = 0;
  bool seen_q = false;
  std::size_t start = eq + 1;
  while (start <= text.size()) {
    const auto star = text.find('*', start);
    const std::string factor = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (!factor.empty() && factor[0] == 'q') {
      if (seen_q) throw UsageError("substitution '" + text + "' has more than one q factor");
      seen_q = true;
      shift = 1;
      if (factor.size() > 1) {
        std::size_t used = 0;
        try {
          if (factor[1] != '^') throw UsageError("");
          shift = std::stoi(factor.substr(2), &used);
          if (used != factor.size() - 2) throw UsageError("");
        } catch (const std::exception&) {
          throw UsageError("malformed q power in '" + text + "'");
        }
      }
    } else {
      colour_part += (colour_part.empty() ? "" : "*") + factor;
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  CoeffPoly poly;
  try {
    poly = parse_coeff_poly(colour_part.empty() ? "1" : colour_part);
  } catch (const std::exception& e) {
    throw UsageError("malformed substitution '" + text + "': " + e.what());
  }
  if (!poly.is_monomial() || poly.terms().front().second != 1)
    throw UsageError("substitution '" + text + "' is not a colour monomial");
  sub.set(target, poly.terms().front().first, shift);
}

QSeries family_series(const std::string& family, std::optional<int> k, std::size_t trunc) {
  auto need_k = [&](int min_k) {
    if (!k) throw UsageError("family " + family + " requires --k");
    if (*k < min_k) throw UsageError("family " + family + " requires k >= " + std::to_string(min_k));
    return *k;
  };
  if (family == "GC") {
    const int kk = need_k(0);
    return capparelli_recurrence(kk, trunc).at(kk);
  }
  if (family == "GP") {
    const int kk = need_k(0);
    return kk == 0 ? QSeries::one(trunc) : primc_system(kk, trunc).g.at(kk, Colour::d);
  }
  if (family == "H") {
    const int kk = need_k(-1);
    return h_sequence(kk, trunc).at(kk);
  }
  if (family == "U") {
    const int kk = need_k(0);
    return u_by_recurrence(kk, trunc).values.at(kk);
  }
  if (family == "CLOSED-GC") return finite_capparelli(need_k(0), trunc);
  if (family == "CLOSED-GP") return finite_primc(need_k(0), trunc);
  if (family == "PRODUCT-CAPA") return product_capparelli(trunc);
  if (family == "PRODUCT-PRIMC") return product_primc(trunc);
  throw UsageError("unknown family '" + family + "'");
}

int run_series(const std::string& family, std::optional<int> k, std::size_t trunc, const std::vector<std::string>& sets,
               bool json) {
  if (trunc < 1) throw UsageError("--trunc must be >= 1");
  Substitution sub;
  for (const auto& s : sets) apply_set(sub, s);
  // A colour image carrying q^-t can pull arbitrarily high terms below the
  // truncation, so the printed prefix would not be exact.
  for (const auto& im : sub.images)
    if (im.q_shift < 0) throw UsageError("negative q powers in --set are not supported");
  QSeries s = family_series(family, k, trunc);
  if (!sets.empty()) s = substitute(s, sub);
  if (json) {
    nlohmann::json j{{"schema", 1}, {"family", family}, {"series", to_json(s)}};
    if (k) j["k"] = *k;
    j["substitutions"] = sets;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_text(s) << '\n';
  }
  return 0;
}

int run_verify(const std::string& theorem, const VerifyOptions& options, bool json, bool timing) {
  std::vector<std::string> ids;
  if (theorem == "all") {
    ids = theorem_ids();
  } else {
    if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end()) {
      std::string list;
      for (const auto& id : theorem_ids()) list += " " + id;
      throw UsageError("unknown theorem id '" + theorem + "'; known ids: all" + list);
    }
    ids = {theorem};
  }
  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& id : ids) {
    for (const auto& r : verify(id, options)) {
      all_pass = all_pass && r.pass;
      if (json)
        reports.push_back(to_json(r, timing));
      else
        std::cout << to_text(r, timing) << '\n';
    }
  }
  if (json) std::cout << nlohmann::json{{"schema", 1}, {"reports", reports}}.dump(2) << '\n';
  return all_pass ? 0 : kExitFail;
}

EnumSpec named_spec(const std::string& matrix, std::optional<int> max_part) {
  if (matrix == "C") return capparelli_spec(max_part);
  if (matrix == "Ctilde") return capparelli_tilde_spec(max_part);
  if (matrix == "P") return primc_spec(max_part);
  if (matrix == "M1") return insertion_stage_spec(max_part);
  if (matrix == "M2") return recolour_stage_spec(max_part);
  if (matrix == "P_dil2") {
    EnumSpec s = primc_dil2_spec();
    s.set_max_part(max_part);
    return s;
  }
  throw UsageError("unknown matrix '" + matrix + "' (expected C, Ctilde, P, P_dil2, M1, M2)");
}

int run_enumerate(const std::string& matrix, std::optional<int> max_part, int max_weight, bool json) {
  if (max_weight < 0) throw UsageError("--max-weight must be >= 0");
  const auto members = enumerate(named_spec(matrix, max_part), max_weight);
  if (json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : members) list.push_back(to_string(p));
    nlohmann::json j{{"schema", 1}, {"matrix", matrix}, {"max_weight", max_weight}, {"partitions", list}};
    j["max_part"] = max_part ? nlohmann::json(*max_part) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& p : members) std::cout << to_string(p) << '\n';
  }
  return 0;
}

ColouredPartition parse_or_usage(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
}

int run_dilate(const std::string& rule_name, const std::string& partition, bool json) {
  DilationRule rule;
  if (rule_name == "primc")
    rule = primc_dilation();
  else if (rule_name == "capparelli")
    rule = capparelli_dilation();
  else if (rule_name == "capparelli-tilde")
    rule = capparelli_tilde_dilation();
  else
    throw UsageError("unknown rule '" + rule_name + "' (expected primc, capparelli, capparelli-tilde)");
  ColouredPartition out;
  try {
    out = dilate_partition(parse_or_usage(partition), rule);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json)
    std::cout << nlohmann::json{{"schema", 1}, {"rule", rule_name}, {"input", partition}, {"output", to_string(out)}}.dump(2)
              << '\n';
  else
    std::cout << to_string(out) << '\n';
  return 0;
}

int run_bijection(const std::string& direction, const std::string& lambda, const std::string& mu, const std::string& nu,
                  bool trace, bool json) {
  BijectionTrace t;
  try {
    if (direction == "forward")
      t = forward(PartitionPair{parse_or_usage(lambda), parse_or_usage(mu)});
    else
      t = inverse(parse_or_usage(nu));
  } catch (const BijectionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& v : e.violations()) std::cerr << "  " << to_string(v) << '\n';
    return kExitUsage;
  }
  if (json) {
    nlohmann::json j = to_json(t);
    if (!trace) {
      for (const char* key : {"mu_prime", "nu1", "nu2"}) j.erase(key);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (trace) {
    std::cout << "lambda: " << to_string(t.pair.lambda) << '\n'
              << "mu:     " << to_string(t.pair.mu) << '\n'
              << "mu':    " << to_string(t.mu_prime) << '\n'
              << "nu1:    " << to_string(t.nu1) << '\n'
              << "nu2:    " << to_string(t.nu2) << '\n'
              << "nu3:    " << to_string(t.nu3) << '\n';
  } else if (direction == "forward") {
    std::cout << to_string(t.nu3) << '\n';
  } else {
    std::cout << "lambda: " << to_string(t.pair.lambda) << '\n' << "mu:     " << to_string(t.pair.mu) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-words partition identities: series, enumeration, verification, bijection"};
  app.require_subcommand(1);

  std::string family, theorem = "all", matrix, rule, direction, lambda, mu, nu, partition, k_text;
  std::optional<int> max_part, max_weight;
  std::size_t trunc = 20;
  std::vector<std::string> sets;
  bool json = false, trace = false, timing = false;
  unsigned threads = 0;

  auto* series = app.add_subcommand("series", "Print one generating series");
  series->add_option("--family", family, "GC, GP, H, U, CLOSED-GC, CLOSED-GP, PRODUCT-CAPA or PRODUCT-PRIMC")->required();
  series->add_option("--k", k_text, "Index k");
  series->add_option("--trunc", trunc, "Truncation order N (terms q^0..q^{N-1})");
  series->add_option("--set", sets, "Substitution VAR=EXPR, e.g. b=c or a=a*q");
  series->add_flag("--json", json, "JSON output");

  auto* ver = app.add_subcommand("verify", "Check a theorem; exit status 1 if any check fails");
  ver->add_option("--theorem", theorem, "Theorem id or 'all'");
  ver->add_option("--k,--k-range", k_text, "K or LO..HI");
  auto* trunc_opt = ver->add_option("--trunc", trunc, "Truncation order");
  ver->add_option("--max-weight", max_weight, "Weight bound for comb and remark");
  ver->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  ver->add_flag("--json", json, "JSON output");
  ver->add_flag("--timing", timing, "Report elapsed time per check");

  auto* en = app.add_subcommand("enumerate", "List the members of a partition family");
  en->add_option("--matrix", matrix, "C, Ctilde, P, P_dil2, M1 or M2")->required();
  en->add_option("--max-part", max_part, "Largest allowed part");
  en->add_option("--max-weight", max_weight, "Largest allowed weight")->required();
  en->add_flag("--json", json, "JSON output");

  auto* dil = app.add_subcommand("dilate", "Apply a dilation rule to a partition");
  dil->add_option("--rule", rule, "primc, capparelli or capparelli-tilde")->required();
  dil->add_option("--partition", partition, "Partition string, e.g. 1a+1b")->required();
  dil->add_flag("--json", json, "JSON output");

  auto* bij = app.add_subcommand("bijection", "Run the pair-to-Primc bijection or its inverse");
  bij->add_option("direction", direction, "forward or inverse")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  bij->add_option("--lambda", lambda, "Capparelli partition (forward)");
  bij->add_option("--mu", mu, "Partition with every part coloured c (forward)");
  bij->add_option("--nu", nu, "Primc partition (inverse)");
  bij->add_flag("--trace", trace, "Print every intermediate stage");
  bij->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*series) {
      std::optional<int> k;
      if (!k_text.empty()) {
        const auto [lo, hi] = parse_range(k_text);
        if (lo != hi) throw UsageError("series takes a single --k");
        k = lo;
      }
      return run_series(family, k, trunc, sets, json);
    }
    if (*ver) {
      VerifyOptions options;
      if (!k_text.empty()) options.k_range = parse_range(k_text);
      if (trunc_opt->count()) options.trunc = trunc;
      options.max_weight = max_weight;
      options.threads = threads;
      return run_verify(theorem, options, json, timing);
    }
    if (*en) return run_enumerate(matrix, max_part, *max_weight, json);
    if (*dil) return run_dilate(rule, partition, json);
    if (*bij) return run_bijection(direction, lambda, mu, nu, trace, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
