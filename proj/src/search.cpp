#include "mstd/search.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "mstd/parallel.hpp"
#include "mstd/set_ops.hpp"

namespace mstd::search {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

Mask range_mask(Int lo, Int hi) {
  Mask m = 0;
  for (Int x = lo; x <= hi; ++x) m |= Mask{1} << x;
  return m;
}

IntSet mask_to_set(Mask m) {
  std::vector<Int> v;
  for (Mask x = m; x; x &= x - 1) v.push_back(__builtin_ctzll(x));
  return IntSet::from_values(v);
}

}  // namespace

// Fringe pairs

std::vector<fringe::BasePair> enumerate_fringe_pairs(Int n, const FringeSearchOptions& options) {
  if (n < 10 || n > 31) throw Error("enumerate_fringe_pairs: n must lie in [10,31]");
  const Mask forced1 = range_mask(1, 4) | range_mask(n, n + 1) | range_mask(2 * n - 3, 2 * n);
  const Mask forced2 = range_mask(5, 7) | range_mask(2 * n - 6, 2 * n - 4);
  const Mask full = range_mask(1, 2 * n);
  if (forced1 & forced2) throw Error("enumerate_fringe_pairs: forced elements collide for this n");

  std::vector<int> free_bits;
  for (Int x = 1; x <= 2 * n; ++x)
    if (!((forced1 | forced2) >> x & 1)) free_bits.push_back(static_cast<int>(x));
  const std::uint64_t candidates = std::uint64_t{1} << free_bits.size();
  if (candidates > options.max_candidates)
    throw Error("enumerate_fringe_pairs: " + std::to_string(candidates) + " candidates exceed the configured cap");

  // Split the low free bits into chunks so each task scans a contiguous block.
  const int chunk_bits = std::min<int>(static_cast<int>(free_bits.size()), 14);
  const std::uint64_t chunks = candidates >> chunk_bits;
  std::vector<std::vector<Mask>> found(chunks);
  const int n1 = static_cast<int>(n), n2 = static_cast<int>(n - 4);
  const bool need_p = options.conditions == fringe::PairConditions::Full;

  parallel_for(
      chunks,
      [&](std::size_t c) {
        for (std::uint64_t low = 0; low < (std::uint64_t{1} << chunk_bits); ++low) {
          const std::uint64_t code = (static_cast<std::uint64_t>(c) << chunk_bits) | low;
          Mask a1 = forced1;
          for (std::size_t b = 0; b < free_bits.size(); ++b)
            if (code >> b & 1) a1 |= Mask{1} << free_bits[b];
          const auto c1 = small_counts(a1);
          if (!c1.mstd() || (need_p && !(c1.sp(n1) && c1.dp(n1)))) continue;
          const auto c2 = small_counts(full & ~a1);
          if (!c2.mstd() || (need_p && !(c2.sp(n2) && c2.dp(n2)))) continue;
          found[c].push_back(a1);
        }
      },
      options.threads);

  std::vector<Mask> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());

  std::vector<fringe::BasePair> out;
  out.reserve(all.size());
  for (Mask a1 : all) {
    auto check = fringe::validate_base_pair(mask_to_set(a1), mask_to_set(full & ~a1), n, options.conditions);
    if (!check.ok()) throw Error("enumerate_fringe_pairs: candidate failed re-validation: " + check.violations.front());
    out.push_back(*check.pair);
  }
  return out;
}

// Exhaustive k-decomposition

namespace {

constexpr int kMaxParts = 16;

struct State {
  std::array<Mask, kMaxParts> masks{};
  std::array<int, kMaxParts> counts{};
  int used = 0;
};

struct TaskResult {
  std::uint64_t leaves = 0;
  bool found = false;
  bool exhausted_budget = false;
  State witness;
};

class Exhaustive {
 public:
  Exhaustive(int r, int k, std::uint64_t budget) : r_(r), k_(k), budget_(budget) {}

  // Collects the states reached after assigning `depth` elements, in DFS order.
  void prefixes(int depth, std::vector<State>& out) const {
    State s;
    collect(r_, depth, s, out);
  }

  TaskResult run(const State& start, int next_element) const {
    TaskResult res;
    State s = start;
    dfs(next_element, s, res);
    return res;
  }

 private:
  bool viable(const State& s, int remaining) const {
    for (int j = 0; j < k_; ++j)
      if (s.counts[j] + remaining < kMinMstdSize) return false;
    return true;
  }

  template <class Visit>
  void for_each_choice(int e, State& s, Visit&& visit) const {
    const int limit = std::min(s.used + 1, k_);
    for (int j = 0; j < limit; ++j) {
      const int old_used = s.used;
      s.masks[j] |= Mask{1} << e;
      ++s.counts[j];
      if (j == s.used) ++s.used;
      const bool stop = viable(s, e - 1) ? visit(s) : false;
      s.masks[j] &= ~(Mask{1} << e);
      --s.counts[j];
      s.used = old_used;
      if (stop) return;
    }
  }

  void collect(int e, int depth, State& s, std::vector<State>& out) const {
    if (depth == 0 || e == 0) {
      out.push_back(s);
      return;
    }
    for_each_choice(e, s, [&](State& t) {
      collect(e - 1, depth - 1, t, out);
      return false;
    });
  }

  bool leaf_ok(const State& s) const {
    for (int j = 0; j < k_; ++j)
      if (!small_counts(s.masks[j]).mstd()) return false;
    return true;
  }

  // Returns true to stop (witness found or budget exhausted).
  bool dfs(int e, State& s, TaskResult& res) const {
    if (e == 0) {
      ++res.leaves;
      if (s.used == k_ && leaf_ok(s)) {
        res.found = true;
        res.witness = s;
        return true;
      }
      if (res.leaves > budget_) {
        res.exhausted_budget = true;
        return true;
      }
      return false;
    }
    bool stop = false;
    for_each_choice(e, s, [&](State& t) { return stop = dfs(e - 1, t, res); });
    return stop;
  }

  int r_, k_;
  std::uint64_t budget_;
};

}  // namespace

DecompositionResult exists_k_decomposition(Int r, int k, std::uint64_t budget, unsigned threads) {
  if (k < 1 || k > kMaxParts) throw Error("exists_k_decomposition: k must lie in [1,16]");
  if (r < 1 || r > 63) throw Error("exists_k_decomposition: r must lie in [1,63]");
  DecompositionResult result;
  if (r < static_cast<Int>(k) * kMinMstdSize) {
    result.verdict = Verdict::No;
    return result;
  }
  const Exhaustive search(static_cast<int>(r), k, budget);
  const int depth = static_cast<int>(std::min<Int>(r - 1, 10));
  std::vector<State> starts;
  search.prefixes(depth, starts);
  std::vector<TaskResult> results(starts.size());
  parallel_for(
      starts.size(), [&](std::size_t i) { results[i] = search.run(starts[i], static_cast<int>(r) - depth); }, threads);

  // Serial-equivalent merge: the witness is the first one in DFS order.
  std::uint64_t spent = 0;
  for (const auto& t : results) {
    if (t.found) {
      result.leaves = spent + t.leaves;
      if (result.leaves > budget) break;
      result.verdict = Verdict::Yes;
      Partition p{1, r, {}};
      for (int j = 0; j < k; ++j) p.parts.push_back(mask_to_set(t.witness.masks[j]));
      result.witness = std::move(p);
      return result;
    }
    spent += t.leaves;
    result.leaves = spent;
    if (t.exhausted_budget || spent > budget) break;
  }
  result.verdict = spent > budget || std::any_of(results.begin(), results.end(), [](const TaskResult& t) {
                     return t.exhausted_budget || t.found;
                   })
                       ? Verdict::Unknown
                       : Verdict::No;
  return result;
}

FeasibilityTable feasibility_table(int k, Int r_min, Int r_max, std::uint64_t budget, unsigned threads) {
  if (r_min > r_max) throw Error("feasibility_table: empty range");
  FeasibilityTable table;
  table.k = k;
  bool seen_yes = false;
  for (Int r = r_min; r <= r_max; ++r) {
    auto res = exists_k_decomposition(r, k, budget, threads);
    if (res.verdict == Verdict::Yes) {
      if (!table.first_feasible) table.first_feasible = r;
      seen_yes = true;
    } else if (res.verdict == Verdict::No && seen_yes) {
      table.non_monotonic.push_back(r);
    }
    table.rows.push_back({r, res.verdict, std::move(res.witness)});
  }
  return table;
}

// Minimal MSTD cardinality

MinCardinality min_mstd_cardinality(Int span_bound) {
  if (span_bound < 0 || span_bound > 40) throw Error("min_mstd_cardinality: span bound must lie in [0,40]");
  const int free = static_cast<int>(span_bound);
  for (int c = 1; c <= free + 1; ++c) {
    // Subsets containing 0 with c-1 further elements from [1, span_bound], in increasing mask order.
    const int pick = c - 1;
    if (pick == 0) {
      if (small_counts(1).mstd()) return {1, IntSet::from_values({0})};
      continue;
    }
    Mask m = (Mask{1} << pick) - 1;
    const Mask end = Mask{1} << free;
    while (m < end) {
      const Mask set = (m << 1) | 1;
      if (small_counts(set).mstd()) return {static_cast<std::size_t>(c), mask_to_set(set)};
      const Mask low = m & -m;
      const Mask ripple = m + low;
      m = ripple | (((m ^ ripple) >> 2) / low);
    }
  }
  return {};
}

// Local search

std::optional<Partition> local_search_decomposition(Int r, int k, std::uint64_t seed, std::uint64_t max_steps) {
  if (k < 1 || k > kMaxParts) throw Error("local_search_decomposition: k must lie in [1,16]");
  if (r < 1 || r > 63) throw Error("local_search_decomposition: r must lie in [1,63]");
  std::mt19937_64 rng(seed);
  std::vector<int> owner(static_cast<std::size_t>(r + 1));
  std::array<Mask, kMaxParts> masks{};

  auto score = [&]() {
    int worst = 1 << 20;
    for (int j = 0; j < k; ++j) {
      if (!masks[j]) return -(1 << 20);
      const auto c = small_counts(masks[j]);
      worst = std::min(worst, c.sum_count() - c.diff_count());
    }
    return worst;
  };
  auto move = [&](Int x, int to) {
    masks[owner[x]] &= ~(Mask{1} << x);
    owner[x] = to;
    masks[to] |= Mask{1} << x;
  };

  constexpr std::uint64_t kRestart = 4000;
  std::uniform_int_distribution<Int> pick_elem(1, r);
  std::uniform_int_distribution<int> pick_part(0, k - 1);
  std::uint64_t steps = 0;
  while (steps < max_steps) {
    masks.fill(0);
    for (Int x = 1; x <= r; ++x) {
      owner[x] = pick_part(rng);
      masks[owner[x]] |= Mask{1} << x;
    }
    int current = score();
    for (std::uint64_t it = 0; it < kRestart && steps < max_steps; ++it, ++steps) {
      if (current > 0) {
        Partition p{1, r, {}};
        for (int j = 0; j < k; ++j) p.parts.push_back(mask_to_set(masks[j]));
        return p;
      }
      const Int x = pick_elem(rng);
      const int fx = owner[x];
      move(x, (fx + 1 + pick_part(rng) % std::max(1, k - 1)) % k);
      Int y = 0;
      int fy = 0;
      if (rng() % 10 < 3) {
        y = pick_elem(rng);
        fy = owner[y];
        move(y, (fy + 1 + pick_part(rng) % std::max(1, k - 1)) % k);
      }
      const int next = score();
      if (next >= current) {
        current = next;
      } else {
        if (y) move(y, fy);
        move(x, fx);
      }
    }
  }
  return std::nullopt;
}

}  // namespace mstd::search
