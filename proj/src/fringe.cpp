#include "mstd/fringe.hpp"

#include <random>

#include "mstd/set_ops.hpp"

namespace mstd::fringe {

namespace {

std::string range_str(Int lo, Int hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

bool contains_all(const std::optional<IntSet>& s, Int lo, Int hi) { return s && s->contains_range(lo, hi); }

bool inside(const std::optional<IntSet>& s, Int lo, Int hi) { return !s || (s->min() >= lo && s->max() <= hi); }

IntSet stepped(Int first, Int last) { return IntSet::interval(first, last, 2); }

IntSet join(std::initializer_list<IntSet> parts) { return set_union(std::vector<IntSet>(parts)); }

}  // namespace

// Base pairs

std::string_view to_string(PairConditions c) { return c == PairConditions::Full ? "full" : "numbered"; }

PairConditions parse_pair_conditions(std::string_view name) {
  if (name == "full") return PairConditions::Full;
  if (name == "numbered") return PairConditions::Numbered;
  throw Error("unknown pair conditions: " + std::string(name));
}

BasePairCheck validate_base_pair(const IntSet& a1, const IntSet& a2, Int n, PairConditions conditions) {
  BasePairCheck check;
  auto& v = check.violations;
  if (n < 8) {
    v.push_back("n must be at least 8");
    return check;
  }
  const IntSet full = IntSet::interval(1, 2 * n);
  if (!a1.disjoint_from(a2)) v.push_back("(1) A1 and A2 are not disjoint");
  if (!(a1.unite(a2) == full)) v.push_back("(1) A1 and A2 do not cover exactly [1,2n]");

  const auto l1 = a1.restrict_to(1, n), r1 = a1.restrict_to(n + 1, 2 * n);
  const auto l2 = a2.restrict_to(1, n), r2 = a2.restrict_to(n + 1, 2 * n);
  if (!contains_all(l1, 1, 4) || !(l1 && l1->contains(n))) v.push_back("(3) [1,4] and n are not all in L1");
  if (!(r1 && r1->contains(n + 1)) || !contains_all(r1, 2 * n - 3, 2 * n))
    v.push_back("(3) n+1 and [2n-3,2n] are not all in R1");
  if (!contains_all(l2, 5, 7)) v.push_back("(4) [5,7] is not contained in L2");
  if (!contains_all(r2, 2 * n - 6, 2 * n - 4)) v.push_back("(4) [2n-6,2n-4] is not contained in R2");

  if (!is_mstd(a1)) v.push_back("A1 is not MSTD");
  if (!is_mstd(a2)) v.push_back("A2 is not MSTD");
  const bool p1 = n <= a1.max() - a1.min() && is_p(a1, n);
  const bool p2 = n - 4 <= a2.max() - a2.min() && is_p(a2, n - 4);
  if (conditions == PairConditions::Full) {
    if (!p1) v.push_back("A1 is not P_n");
    if (!p2) v.push_back("A2 is not P_{n-4}");
  }

  if (v.empty()) check.pair = BasePair{a1, a2, *l1, *r1, *l2, *r2, n, p1 && p2};
  return check;
}

BasePair reference_pair() {
  const auto a1 = IntSet::from_values({1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20, 21, 26, 27, 28, 31, 33, 37, 38, 39, 40});
  const auto a2 = IntSet::from_values({5, 6, 7, 10, 12, 16, 17, 18, 19, 22, 23, 24, 25, 29, 30, 32, 34, 35, 36});
  auto check = validate_base_pair(a1, a2, 20);
  return *check.pair;
}

// O-blocks

namespace {

void check_first_block_params(Int n, Int k, Int m) {
  if (2 * k < n + 4) throw Error("k must satisfy k >= n/2 + 2");
  if (m < 0) throw Error("m must be nonnegative");
}

IntSet block_o11(Int n, Int k) { return join({IntSet::from_values({n + 4, n + 2 * k + 2}), stepped(n + 5, n + 2 * k + 1)}); }

IntSet block_o12(Int n, Int k, Int m) {
  return join({IntSet::from_values({n + m + 2 * k + 3, n + m + 4 * k + 1}), stepped(n + m + 2 * k + 4, n + m + 4 * k)});
}

IntSet block_o21(Int n, Int k) {
  return join({IntSet::interval(n + 1, n + 3), stepped(n + 6, n + 2 * k), IntSet::interval(n + 2 * k + 3, n + 2 * k + 5)});
}

IntSet block_o22(Int n, Int k, Int m) {
  return join({IntSet::interval(n + m + 2 * k, n + m + 2 * k + 2), stepped(n + m + 2 * k + 5, n + m + 4 * k - 1),
               IntSet::interval(n + m + 4 * k + 2, n + m + 4 * k + 4)});
}

}  // namespace

OBlocks build_o_blocks(Int n, Int k, Int m) {
  check_first_block_params(n, k, m);
  if (m < 6) throw Error("m must be at least 6 for the four transition blocks to be disjoint");
  return {block_o11(n, k), block_o12(n, k, m), block_o21(n, k), block_o22(n, k, m)};
}

// Middles

std::optional<std::string> find_chain_failure(const std::optional<IntSet>& s, int run, Int first_lo, Int first_hi,
                                              Int max_step, Int last_lo, Int last_hi) {
  const std::string what = run == 2 ? "pair" : run == 3 ? "triplet" : std::to_string(run) + "-run";
  if (!s) return "no " + what + " exists (set is empty)";
  const Int len = run - 1;
  bool any_first = false;
  bool reached = false;
  Int last_reachable = 0;
  Int break_from = 0, break_to = 0;
  bool have_break = false;
  bool ends = false;
  for (Int t = s->min(); t + len <= s->max(); ++t) {
    if (!s->contains_range(t, t + len)) continue;
    const bool in_first = t >= first_lo && t + len <= first_hi;
    bool reachable = in_first;
    if (!reachable && reached) {
      if (t - last_reachable <= max_step) {
        reachable = true;
      } else if (!have_break) {
        have_break = true;
        break_from = last_reachable;
        break_to = t;
      }
    }
    any_first |= in_first;
    if (reachable) {
      reached = true;
      last_reachable = t;
      if (t >= last_lo && t + len <= last_hi) ends = true;
    }
  }
  if (ends) return std::nullopt;
  if (!any_first) return "no " + what + " lies in the opening window " + range_str(first_lo, first_hi);
  if (have_break)
    return what + " chain breaks: next " + what + " after " + std::to_string(break_from) + " starts at " +
           std::to_string(break_to) + ", more than " + std::to_string(max_step) + " later";
  return "no reachable " + what + " lies in the closing window " + range_str(last_lo, last_hi);
}

Diagnostics check_middles(const MiddlePlan& p) {
  Diagnostics d;
  const Int n = p.n, k = p.k, m = p.m;
  const Int lo = p.region_lo(), hi = p.region_hi();
  if (auto f = find_chain_failure(p.m1, 2, lo, n + 4 * k + 1, 2 * k - 1, n + m + 4, n + m + 2 * k - 1))
    d.failures.push_back("(i) M1: " + *f);
  if (auto f = find_chain_failure(p.m2, 3, lo, n + 4 * k + 5, 2 * k + 5, n + m, n + m + 2 * k - 1))
    d.failures.push_back("(ii) M2: " + *f);
  if (lo > hi) {
    d.failures.push_back("(iii) middle region " + range_str(lo, hi) + " is empty");
    return d;
  }
  if (!p.m1.disjoint_from(p.m2)) d.failures.push_back("(iii) M1 and M2 intersect");
  const IntSet region = IntSet::interval(lo, hi);
  const IntSet both = p.m1.unite(p.m2);
  if (!both.is_subset_of(region)) d.failures.push_back("(iii) M1 or M2 leaves the region " + range_str(lo, hi));
  if (auto missed = region.minus(both)) {
    d.failures.push_back("(iii) union misses " + std::to_string(missed->size()) + " elements of " + range_str(lo, hi) +
                         ", within " + range_str(missed->min(), missed->max()));
  }
  return d;
}

std::string_view to_string(MiddleStrategy s) { return s == MiddleStrategy::Canonical ? "canonical" : "random"; }

MiddleStrategy parse_middle_strategy(std::string_view name) {
  if (name == "canonical") return MiddleStrategy::Canonical;
  if (name == "random" || name == "seeded-random") return MiddleStrategy::SeededRandom;
  throw Error("unknown middle strategy: " + std::string(name));
}

namespace {

// Period-5 tiling {t,t+1} -> M1, {t+2,t+3,t+4} -> M2 starting at `start`; every
// element outside the tiles goes to M1.
std::optional<MiddlePlan> tiled(Int n, Int k, Int m, Int lo, Int hi, Int start) {
  std::vector<Int> v1, v2;
  Int t = start;
  for (; t + 4 <= hi; t += 5) {
    v1.insert(v1.end(), {t, t + 1});
    v2.insert(v2.end(), {t + 2, t + 3, t + 4});
  }
  for (Int x = lo; x < start; ++x) v1.push_back(x);
  for (Int x = t; x <= hi; ++x) v1.push_back(x);
  if (v1.empty() || v2.empty()) return std::nullopt;
  return MiddlePlan{IntSet::from_values(v1), IntSet::from_values(v2), n, k, m};
}

}  // namespace

MiddlePlan build_middles(Int n, Int k, Int m, MiddleStrategy strategy, std::uint64_t seed) {
  check_first_block_params(n, k, m);
  const Int lo = n + 2 * k + 6, hi = n + m + 2 * k - 1;
  if (lo > hi) throw Error("middle region is empty (m <= 6); both chains are required");

  if (strategy == MiddleStrategy::Canonical) {
    // Left-aligned tiling first; if a closing window is missed, realign the tiling
    // so it ends flush with the region.
    const Int leftover = (hi - lo + 1) % 5;
    for (Int start : {lo, lo + leftover}) {
      auto plan = tiled(n, k, m, lo, hi, start);
      if (plan && check_middles(*plan).ok()) return *plan;
    }
    throw Error("middle region " + range_str(lo, hi) + " is too short to host both chains");
  }

  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Int> v1, v2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    v1.clear();
    v2.clear();
    for (std::size_t i = 0; i < width; ++i) ((rng() >> 63) ? v1 : v2).push_back(lo + static_cast<Int>(i));
    if (v1.empty() || v2.empty()) continue;
    MiddlePlan plan{IntSet::from_values(v1), IntSet::from_values(v2), n, k, m};
    if (check_middles(plan).ok()) return plan;
  }
  throw Error("random middle split found no valid plan within 10000 attempts");
}

Int min_middle_length(Int n, Int k) {
  check_first_block_params(n, k, 0);
  for (Int m = 7; m <= 64 + 4 * k; ++m) {
    try {
      build_middles(n, k, m);
      return m;
    } catch (const Error&) {
    }
  }
  throw Error("no admissible middle length found for these parameters");
}

// Assemblies

IntSet assemble_ft(const IntSet& left, const IntSet& right, Int n, Int k, Int m, const std::optional<IntSet>& middle) {
  std::vector<std::string> v;
  if (2 * k < n + 4) v.push_back("k must satisfy k >= n/2 + 2");
  if (m < 0) v.push_back("m must be nonnegative");
  if (!inside(left, 1, n)) v.push_back("L must lie in [1,n]");
  if (!inside(right, n + 1, 2 * n)) v.push_back("R must lie in [n+1,2n]");
  if (!left.contains_range(1, 4) || !left.contains(n)) v.push_back("[1,4] and n must lie in L");
  if (!right.contains(n + 1) || !right.contains_range(2 * n - 3, 2 * n)) v.push_back("n+1 and [2n-3,2n] must lie in R");
  if (!v.empty()) throw Error("assemble_ft: " + v.front());
  if (!is_mstd(left.unite(right))) throw Error("assemble_ft: L+R must be MSTD");

  const Int lo = n + 2 * k + 3, hi = n + m + 2 * k + 2;
  if (!inside(middle, lo, hi)) throw Error("assemble_ft: M must lie in " + range_str(lo, hi));
  if (middle) {
    if (auto f = find_chain_failure(middle, 2, lo, n + 4 * k + 1, 2 * k - 1, n + m + 4, hi))
      throw Error("assemble_ft: M " + *f);
  } else if (std::max(lo, n + m + 4) + 1 > std::min(n + 4 * k + 1, hi)) {
    throw Error("assemble_ft: M is empty but the opening and closing pair windows are disjoint");
  }

  std::vector<IntSet> parts{left, block_o11(n, k), block_o12(n, k, m), right.translate(m + 4 * k + 4)};
  if (middle) parts.push_back(*middle);
  IntSet out = set_union(parts);
  if (!is_sp(out, n)) throw Error("assemble_ft: result is not SP_n");
  if (!is_mstd(out)) throw Error("assemble_ft: result is not MSTD");
  return out;
}

IntSet assemble_ss(const IntSet& left, const IntSet& right, Int n, Int k, Int m, const std::optional<IntSet>& middle) {
  std::vector<std::string> v;
  if (2 * k < n - 10) v.push_back("k must satisfy k >= n/2 - 5");
  if (k < 3) v.push_back("k must be at least 3");
  if (m < 6) v.push_back("m must be at least 6");
  if (!inside(left, 5, n)) v.push_back("L must lie in [5,n]");
  if (!inside(right, n + 1, 2 * n - 4)) v.push_back("R must lie in [n+1,2n-4]");
  if (!left.contains_range(5, 7)) v.push_back("[5,7] must lie in L");
  if (!right.contains_range(2 * n - 6, 2 * n - 4)) v.push_back("[2n-6,2n-4] must lie in R");
  if (!v.empty()) throw Error("assemble_ss: " + v.front());
  if (!is_mstd(left.unite(right))) throw Error("assemble_ss: L+R must be MSTD");

  const Int lo = n + 2 * k + 6, hi = n + m + 2 * k - 1;
  if (!inside(middle, lo, hi)) throw Error("assemble_ss: M must lie in " + range_str(lo, hi));
  if (auto f = find_chain_failure(middle, 3, lo, n + 4 * k + 5, 2 * k + 5, n + m, hi))
    throw Error("assemble_ss: M " + *f);

  std::vector<IntSet> parts{left, block_o21(n, k), block_o22(n, k, m), right.translate(m + 4 * k + 4), *middle};
  IntSet out = set_union(parts);
  if (!is_sp(out, n - 4)) throw Error("assemble_ss: result is not SP_{n-4}");
  if (!is_mstd(out)) throw Error("assemble_ss: result is not MSTD");
  return out;
}

Partition two_decompose(const BasePair& base, Int k, Int m, MiddleStrategy strategy, std::uint64_t seed) {
  const Int n = base.n;
  const MiddlePlan plan = build_middles(n, k, m, strategy, seed);
  Partition p{1, 2 * n + m + 4 * k + 4, {}};
  p.parts.push_back(assemble_ft(base.l1, base.r1, n, k, m, plan.m1));
  p.parts.push_back(assemble_ss(base.l2, base.r2, n, k, m, plan.m2));
  const auto check = check_partition(p);
  if (!check.ok()) throw Error("two_decompose: output failed verification: " + check.issues.front());
  return p;
}

}  // namespace mstd::fringe
