#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mstd/families.hpp"
#include "mstd/fringe.hpp"
#include "mstd/literals.hpp"
#include "mstd/parallel.hpp"
#include "mstd/probability.hpp"
#include "mstd/scenarios.hpp"
#include "mstd/search.hpp"
#include "mstd/set_ops.hpp"

namespace mstd::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for bad user input; maps to exit code 2.
struct InputError : Error {
  using Error::Error;
};

struct Context {
  std::ostream& out;
  bool json_output = false;
  bool confirm_large = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// A literal, or the name of a file holding one.
IntSet load_set(const std::string& text) {
  std::error_code ec;
  const std::string body = std::filesystem::is_regular_file(text, ec) ? read_file(text) : text;
  try {
    return parse_set_literal(body);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

IntSet set_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + " must be a nonempty integer array");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(what + " must contain integers only");
    v.push_back(x.get<Int>());
  }
  return IntSet::from_values(v);
}

json to_json(const IntSet& a) { return a.values(); }

void require_large(const Context& ctx, bool large, const std::string& what) {
  if (large && !ctx.confirm_large)
    throw InputError(what + " exceeds the default work budget; rerun with --confirm-large");
}

std::string brief(const IntSet& a) {
  if (a.size() <= 40) return to_string(a);
  return std::to_string(a.size()) + " elements in [" + std::to_string(a.min()) + "," + std::to_string(a.max()) + "]";
}

json profile_json(const IntSet& a, const SumDiffProfile& p) {
  return {{"size", a.size()},
          {"min", a.min()},
          {"max", a.max()},
          {"sum_count", p.sum_count},
          {"diff_count", p.diff_count},
          {"class", std::string(to_string(p.dominance))},
          {"missing_sums", p.missing_sums},
          {"missing_diffs", p.missing_diffs}};
}

// verify

int cmd_verify(Context& ctx, const std::string& literal, std::optional<Int> n, const std::string& kernel_name) {
  const IntSet a = load_set(literal);
  const Kernel kernel = parse_kernel(kernel_name);
  const auto p = profile(a, kernel);
  json j = profile_json(a, p);
  std::optional<bool> sp, dp;
  if (n) {
    if (*n < 0 || *n > a.max() - a.min()) throw InputError("--n must lie in [0, max - min]");
    sp = is_sp(a, *n);
    dp = is_dp(a, *n);
    j["n"] = *n;
    j["sp"] = *sp;
    j["dp"] = *dp;
    j["p"] = *sp && *dp;
  }
  if (ctx.json_output) {
    j["elements"] = to_json(a);
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "set: " << brief(a) << "\n";
    ctx.out << "|A+A| = " << p.sum_count << ", |A-A| = " << p.diff_count << ": " << to_string(p.dominance) << "\n";
    if (p.missing_sums.size() <= 40) {
      ctx.out << "missing sums:";
      for (Int x : p.missing_sums) ctx.out << " " << x;
      ctx.out << "\n";
    }
    if (p.missing_diffs.size() <= 40) {
      ctx.out << "missing differences:";
      for (Int x : p.missing_diffs) ctx.out << " " << x;
      ctx.out << "\n";
    }
    if (n) ctx.out << std::boolalpha << "P_" << *n << ": " << (*sp && *dp) << " (SP " << *sp << ", DP " << *dp << ")\n";
  }
  return p.is_mstd() ? kOk : kMismatch;
}

// construct

void print_partition(Context& ctx, const Partition& p, json extra) {
  const auto check = check_partition(p);
  if (ctx.json_output) {
    json parts = json::array();
    for (const auto& s : p.parts) {
      const auto pr = profile(s);
      parts.push_back({{"size", s.size()},
                       {"sum_count", pr.sum_count},
                       {"diff_count", pr.diff_count},
                       {"mstd", pr.is_mstd()},
                       {"elements", to_json(s)}});
    }
    extra["interval"] = {p.lo, p.hi};
    extra["verified"] = check.ok();
    extra["issues"] = check.issues;
    extra["parts"] = parts;
    ctx.out << extra.dump(2) << "\n";
    return;
  }
  ctx.out << "partition of [" << p.lo << "," << p.hi << "] into " << p.parts.size() << " parts\n";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto pr = profile(p.parts[i]);
    ctx.out << "  part " << i + 1 << ": |A+A| = " << pr.sum_count << ", |A-A| = " << pr.diff_count << ", "
            << brief(p.parts[i]) << "\n";
  }
  ctx.out << "verified: " << (check.ok() ? "yes" : "no") << "\n";
  for (const auto& issue : check.issues) ctx.out << "  " << issue << "\n";
}

fringe::BasePair load_base_pair(const std::string& path, fringe::PairConditions conditions) {
  if (path.empty()) return fringe::reference_pair();
  const json j = read_json_file(path);
  if (!j.is_object() || !j.contains("A1") || !j.contains("A2") || !j.contains("n"))
    throw InputError(path + ": expected an object with A1, A2 and n");
  const auto check = fringe::validate_base_pair(set_from_json(j["A1"], "A1"), set_from_json(j["A2"], "A2"),
                                                j["n"].get<Int>(), conditions);
  if (!check.ok()) {
    std::string msg = path + ": not a valid base pair";
    for (const auto& v : check.violations) msg += "; " + v;
    throw InputError(msg);
  }
  return *check.pair;
}

int cmd_two_decomp(Context& ctx, const std::string& base_path, const std::string& conditions, Int k, Int m,
                   const std::string& strategy, std::uint64_t seed) {
  const auto base = load_base_pair(base_path, fringe::parse_pair_conditions(conditions));
  const auto p = fringe::two_decompose(base, k, m, fringe::parse_middle_strategy(strategy), seed);
  print_partition(ctx, p, {{"n", base.n}, {"k", k}, {"m", m}, {"strategy", strategy}, {"seed", seed}});
  return check_partition(p).ok() ? kOk : kMismatch;
}

int cmd_k_decomp(Context& ctx, int k, Int r) {
  require_large(ctx, k == 3, "a 3-decomposition (r >= 4T+24)");
  const auto p = families::k_decompose(k, r);
  print_partition(ctx, p, {{"k", k}, {"r", r}});
  return check_partition(p).ok() ? kOk : kMismatch;
}

// family

int print_family_set(Context& ctx, const IntSet& s, json extra) {
  const auto p = profile(s);
  if (ctx.json_output) {
    json j = std::move(extra);
    j.update(profile_json(s, p));
    j.erase("missing_sums");
    j.erase("missing_diffs");
    j["ten_strong"] = families::is_ten_strong(s);
    j["elements"] = to_json(s);
    ctx.out << j.dump(2) << "\n";
  } else {
    for (auto it = extra.begin(); it != extra.end(); ++it) ctx.out << it.key() << ": " << it.value().dump() << "\n";
    ctx.out << "set: " << (s.size() <= 200 ? format_spohn(s) : brief(s)) << "\n";
    ctx.out << "size " << s.size() << ", max " << s.max() << ", |A+A| = " << p.sum_count << ", |A-A| = " << p.diff_count
            << ": " << to_string(p.dominance) << "\n";
    ctx.out << "10-strong: " << (families::is_ten_strong(s) ? "yes" : "no") << "\n";
  }
  return p.is_mstd() ? kOk : kMismatch;
}

int cmd_spohn(Context& ctx, const std::string& variant, Int m) {
  const auto v = families::parse_spohn_variant(variant);
  const IntSet s = families::spohn_family(v, m);
  const auto aps = families::family_complement_aps(v, m);
  json extra{{"variant", variant}, {"m", m}};
  if (ctx.json_output) {
    extra["complement_step4"] = to_json(aps.step4);
    extra["complement_step2"] = to_json(aps.step2);
  } else {
    extra["complement_step4"] = "[" + std::to_string(aps.step4.min()) + "," + std::to_string(aps.step4.max()) + "]_4";
    extra["complement_step2"] = "[" + std::to_string(aps.step2.min()) + "," + std::to_string(aps.step2.max()) + "]_2";
  }
  return print_family_set(ctx, s, extra);
}

int cmd_base_expand(Context& ctx, const std::string& set_text, int k, Int m) {
  const IntSet a = load_set(set_text);
  return print_family_set(ctx, families::base_expand(a, k, m), {{"k", k}, {"m", m}});
}

// search

json base_pair_json(const fringe::BasePair& b) {
  return {{"A1", to_json(b.a1)}, {"A2", to_json(b.a2)}, {"n", b.n}, {"p_property", b.p_property}};
}

int cmd_fringe_pairs(Context& ctx, Int n, const std::string& conditions, const std::string& out_path) {
  if (n < 10 || n > 31) throw InputError("--n must lie in [10,31]");
  require_large(ctx, 2 * n - 16 > 24, "fringe enumeration with 2^" + std::to_string(2 * n - 16) + " candidates");
  search::FringeSearchOptions opt;
  opt.conditions = fringe::parse_pair_conditions(conditions);
  opt.max_candidates = std::uint64_t{1} << 46;
  const auto pairs = search::enumerate_fringe_pairs(n, opt);
  json list = json::array();
  for (const auto& b : pairs) list.push_back(base_pair_json(b));
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << list.dump(2) << "\n";
  }
  if (ctx.json_output) {
    ctx.out << json{{"n", n}, {"conditions", conditions}, {"count", pairs.size()}, {"pairs", list}}.dump(2) << "\n";
  } else {
    ctx.out << pairs.size() << " base pairs for n = " << n << " (" << conditions << " conditions)\n";
    for (const auto& b : pairs) ctx.out << "  A1 = " << to_string(b.a1) << (b.p_property ? "" : "  [not P]") << "\n";
  }
  return kOk;
}

int cmd_feasibility(Context& ctx, int k, Int r_min, Int r_max, std::uint64_t budget) {
  if (k < 1 || k > 16) throw InputError("--k must lie in [1,16]");
  if (r_min < 1 || r_max > 63 || r_min > r_max) throw InputError("need 1 <= r-min <= r-max <= 63");
  double log2_work = 0;
  for (int j = 2; j <= k; ++j) log2_work -= std::log2(j);
  log2_work += static_cast<double>(r_max) * std::log2(k);
  require_large(ctx, log2_work > 26, "feasibility search up to r = " + std::to_string(r_max));
  const auto t = search::feasibility_table(k, r_min, r_max, budget);
  if (ctx.json_output) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json j{{"r", row.r}, {"verdict", std::string(search::to_string(row.verdict))}};
      if (row.witness) {
        json parts = json::array();
        for (const auto& s : row.witness->parts) parts.push_back(to_json(s));
        j["witness"] = parts;
      }
      rows.push_back(j);
    }
    json j{{"k", k}, {"rows", rows}, {"non_monotonic", t.non_monotonic}};
    j["first_feasible"] = t.first_feasible ? json(*t.first_feasible) : json(nullptr);
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const auto& row : t.rows) {
      ctx.out << "r = " << row.r << ": " << search::to_string(row.verdict);
      if (row.witness) ctx.out << "  " << to_string(row.witness->parts[0]);
      ctx.out << "\n";
    }
    ctx.out << "first feasible: " << (t.first_feasible ? std::to_string(*t.first_feasible) : "none") << "\n";
    if (!t.non_monotonic.empty()) ctx.out << "non-monotonic values found\n";
  }
  return kOk;
}

int cmd_min_card(Context& ctx, Int span) {
  if (span < 0 || span > 40) throw InputError("--span must lie in [0,40]");
  require_large(ctx, span > 30, "min-card scan over 2^" + std::to_string(span) + " subsets");
  const auto res = search::min_mstd_cardinality(span);
  if (ctx.json_output) {
    json j{{"span_bound", span}};
    j["size"] = res.size ? json(*res.size) : json(nullptr);
    j["witness"] = res.witness ? to_json(*res.witness) : json(nullptr);
    ctx.out << j.dump(2) << "\n";
  } else if (res.size) {
    ctx.out << "smallest MSTD subset of [0," << span << "] has " << *res.size << " elements, e.g. "
            << to_string(*res.witness) << "\n";
  } else {
    ctx.out << "no MSTD subset of [0," << span << "]\n";
  }
  return kOk;
}

// prob

std::vector<probability::FringePair> load_pairs(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_array() || j.empty()) throw InputError(path + ": expected a nonempty list of {\"L\", \"R\"} objects");
  std::vector<probability::FringePair> pairs;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("L") || !e.contains("R")) throw InputError(path + ": every entry needs L and R");
    pairs.push_back({set_from_json(e["L"], "L"), set_from_json(e["R"], "R")});
  }
  return pairs;
}

json report_json(const probability::FringeReport& r) {
  return {{"a", r.a},           {"tau_L", r.tau_l},      {"tau_R", r.tau_r}, {"size_L", r.size_l},
          {"size_R", r.size_r}, {"f", r.f.str()}, {"f_approx", r.f_double()}};
}

int cmd_prob_report(Context& ctx, const std::string& path, Int n) {
  const auto pairs = load_pairs(path);
  const auto sc = probability::sufficient_condition(pairs, n);
  if (ctx.json_output) {
    json reports = json::array();
    for (const auto& r : sc.reports) reports.push_back(report_json(r));
    ctx.out << json{{"n", n},
                    {"pairs", reports},
                    {"sum_f", sc.sum_f.str()},
                    {"sum_f_approx", sc.sum_f.convert_to<double>()},
                    {"violations", sc.violations},
                    {"pass", sc.pass}}
                   .dump(2)
            << "\n";
  } else {
    for (std::size_t i = 0; i < sc.reports.size(); ++i) {
      const auto& r = sc.reports[i];
      ctx.out << "pair " << i + 1 << ": a = " << r.a << ", tau(L) = " << r.tau_l << ", tau(R) = " << r.tau_r
              << ", f = " << r.f << " (" << r.f_double() << ")\n";
    }
    ctx.out << "sum f = " << sc.sum_f << " (" << sc.sum_f.convert_to<double>() << ")\n";
    for (const auto& v : sc.violations) ctx.out << "hypothesis violated: " << v << "\n";
    ctx.out << "sufficient condition: " << (sc.pass ? "pass" : "fail") << "\n";
  }
  return sc.pass ? kOk : kMismatch;
}

int cmd_montecarlo(Context& ctx, const std::string& path, Int n, Int m, std::uint64_t trials, std::uint64_t seed) {
  const auto pairs = load_pairs(path);
  require_large(ctx, static_cast<double>(trials) * static_cast<double>(m + 2 * n) > 1e10,
                "Monte Carlo run of " + std::to_string(trials) + " trials");
  const auto e = probability::monte_carlo_proportion(pairs, n, m, trials, seed);
  if (ctx.json_output) {
    ctx.out << json{{"n", n},
                    {"m", m},
                    {"trials", e.trials},
                    {"seed", seed},
                    {"successes", e.successes},
                    {"estimate", e.proportion},
                    {"ci95", {e.ci_low, e.ci_high}}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "all parts MSTD in " << e.successes << " of " << e.trials << " trials: " << e.proportion
            << " (95% CI " << e.ci_low << " to " << e.ci_high << ")\n";
  }
  return kOk;
}

// bounds, reproduce

int cmd_bounds(Context& ctx, int k) {
  const auto b = families::rk_bounds(k);
  if (ctx.json_output) {
    ctx.out << json{{"k", k}, {"lower", b.lower}, {"upper", b.upper}, {"notes", b.notes}}.dump(2) << "\n";
  } else {
    ctx.out << b.lower << " <= R(" << k << ") <= " << b.upper << "\n";
    for (const auto& n : b.notes) ctx.out << "note: " << n << "\n";
  }
  return kOk;
}

int cmd_reproduce(Context& ctx, const std::string& target) {
  std::vector<std::string> targets;
  if (target == "all") {
    targets = scenarios::names();
  } else {
    const auto& all = scenarios::names();
    if (std::find(all.begin(), all.end(), target) == all.end()) throw InputError("unknown target: " + target);
    targets.push_back(target);
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& name : targets) {
    const auto rep = scenarios::run(name);
    ok = ok && rep.passed();
    if (ctx.json_output) {
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
      reports.push_back({{"target", name}, {"pass", rep.passed()}, {"checks", checks}, {"notes", rep.notes}});
      continue;
    }
    ctx.out << name << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : rep.checks)
      ctx.out << "  [" << (c.ok ? "ok" : "MISMATCH") << "] " << c.label << ": expected " << c.expected << ", got "
              << c.actual << "\n";
    for (const auto& note : rep.notes) ctx.out << "  note: " << note << "\n";
  }
  if (ctx.json_output) ctx.out << (targets.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-dominant (MSTD) set toolkit: verification, constructions, searches"};
  app.name("mstd");
  app.require_subcommand(1);
  Context ctx{out};
  unsigned threads = 0;
  app.add_flag("--json", ctx.json_output, "Emit JSON");
  app.add_flag("--confirm-large", ctx.confirm_large, "Allow runs beyond the default work budget");
  app.add_option("--threads", threads, "Worker threads (default: MSTD_THREADS or all cores)");

  std::function<int()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "Sum/difference profile of a set");
  std::string literal, kernel = "auto";
  std::optional<Int> verify_n;
  verify->add_option("set", literal, "JSON array, (a|d1,...) or a..b[:s], or a file holding one")->required();
  verify->add_option("--n", verify_n, "Also test the P_n property");
  verify->add_option("--kernel", kernel, "auto, shift-or or convolution");
  verify->callback([&] { action = [&] { return cmd_verify(ctx, literal, verify_n, kernel); }; });

  // construct
  auto* construct = app.add_subcommand("construct", "Explicit decompositions");
  construct->require_subcommand(1);
  auto* two = construct->add_subcommand("two-decomp", "Two MSTD sets covering [1, 2n+m+4k+4]");
  std::string base_path, conditions = "full", strategy = "canonical";
  Int two_k = 12, two_m = 30;
  std::uint64_t seed = 0;
  two->add_option("--base", base_path, "Base pair file {\"A1\", \"A2\", \"n\"} (default: reference pair, n = 20)");
  two->add_option("--conditions", conditions, "full or numbered");
  two->add_option("--k", two_k, "Transition width parameter");
  two->add_option("--m", two_m, "Middle length");
  two->add_option("--strategy", strategy, "canonical or random");
  two->add_option("--seed", seed, "Seed for the random middle strategy");
  two->callback([&] { action = [&] { return cmd_two_decomp(ctx, base_path, conditions, two_k, two_m, strategy, seed); }; });

  auto* kd = construct->add_subcommand("k-decomp", "k MSTD sets covering [1, r]");
  int kd_k = 0;
  Int kd_r = 0;
  kd->add_option("--k", kd_k, "Number of parts")->required();
  kd->add_option("--r", kd_r, "Interval length")->required();
  kd->callback([&] { action = [&] { return cmd_k_decomp(ctx, kd_k, kd_r); }; });

  // family
  auto* family = app.add_subcommand("family", "Infinite MSTD families");
  family->require_subcommand(1);
  auto* spohn = family->add_subcommand("spohn", "Gap-notation families A1..A4");
  std::string variant = "A1";
  Int fam_m = 1;
  spohn->add_option("--variant", variant, "A1, A2, A3 or A4");
  spohn->add_option("--m", fam_m, "Number of gaps of 4")->required();
  spohn->callback([&] { action = [&] { return cmd_spohn(ctx, variant, fam_m); }; });

  auto* bexp = family->add_subcommand("base-expand", "Base expansion of a set");
  std::string set_text;
  int bexp_k = 1;
  Int bexp_m = 0;
  bexp->add_option("--set", set_text, "Set literal or file")->required();
  bexp->add_option("--k", bexp_k, "Number of digits")->required();
  bexp->add_option("--m", bexp_m, "Base")->required();
  bexp->callback([&] { action = [&] { return cmd_base_expand(ctx, set_text, bexp_k, bexp_m); }; });

  // search
  auto* srch = app.add_subcommand("search", "Exhaustive searches");
  srch->require_subcommand(1);
  auto* fp = srch->add_subcommand("fringe-pairs", "Enumerate base pairs on [1, 2n]");
  Int fp_n = 20;
  std::string fp_out, fp_conditions = "numbered";
  fp->add_option("--n", fp_n, "Half length")->required();
  fp->add_option("--conditions", fp_conditions, "numbered or full");
  fp->add_option("--out", fp_out, "Write the pairs to this file");
  fp->callback([&] { action = [&] { return cmd_fringe_pairs(ctx, fp_n, fp_conditions, fp_out); }; });

  auto* feas = srch->add_subcommand("feasibility", "Per-r exhaustive k-decomposition verdicts");
  int feas_k = 2;
  Int r_min = 0, r_max = 0;
  std::uint64_t budget = std::uint64_t{1} << 34;
  feas->add_option("--k", feas_k, "Number of parts")->required();
  feas->add_option("--r-min", r_min, "First r")->required();
  feas->add_option("--r-max", r_max, "Last r")->required();
  feas->add_option("--budget", budget, "Complete assignments examined per r before answering unknown");
  feas->callback([&] { action = [&] { return cmd_feasibility(ctx, feas_k, r_min, r_max, budget); }; });

  auto* mc = srch->add_subcommand("min-card", "Smallest MSTD subset of [0, span]");
  Int span = 14;
  mc->add_option("--span", span, "Span bound")->required();
  mc->callback([&] { action = [&] { return cmd_min_card(ctx, span); }; });

  // prob
  auto* prob = app.add_subcommand("prob", "Fringe probability bounds");
  prob->require_subcommand(1);
  auto* rep = prob->add_subcommand("report", "a, tau, f and the sufficient condition");
  std::string pairs_path;
  Int prob_n = 20;
  rep->add_option("--pairs", pairs_path, "Pairs file [{\"L\": [...], \"R\": [...]}] (0-based)")->required();
  rep->add_option("--n", prob_n, "Half length")->required();
  rep->callback([&] { action = [&] { return cmd_prob_report(ctx, pairs_path, prob_n); }; });

  auto* carlo = prob->add_subcommand("montecarlo", "Proportion of random middles giving all-MSTD parts");
  Int carlo_m = 100;
  std::uint64_t trials = 100000, carlo_seed = 0;
  carlo->add_option("--pairs", pairs_path, "Pairs file")->required();
  carlo->add_option("--n", prob_n, "Half length")->required();
  carlo->add_option("--m", carlo_m, "Middle length")->required();
  carlo->add_option("--trials", trials, "Number of trials");
  carlo->add_option("--seed", carlo_seed, "Seed");
  carlo->callback([&] { action = [&] { return cmd_montecarlo(ctx, pairs_path, prob_n, carlo_m, trials, carlo_seed); }; });

  // bounds, reproduce
  auto* bnd = app.add_subcommand("bounds", "Bounds on R(k)");
  int bnd_k = 2;
  bnd->add_option("--k", bnd_k, "Number of parts")->required();
  bnd->callback([&] { action = [&] { return cmd_bounds(ctx, bnd_k); }; });

  auto* repro = app.add_subcommand("reproduce", "Re-run a published example");
  std::string target;
  std::string choices = "all";
  for (const auto& n : scenarios::names()) choices += ", " + n;
  repro->add_option("target", target, choices)->required();
  repro->callback([&] { action = [&] { return cmd_reproduce(ctx, target); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (threads) set_thread_count(threads);
  try {
    const int code = action ? action() : kInputError;
    if (threads) set_thread_count(0);
    return code;
  } catch (const std::exception& e) {
    if (threads) set_thread_count(0);
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace mstd::cli
