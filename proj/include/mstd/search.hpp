#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mstd/fringe.hpp"
#include "mstd/int_set.hpp"
#include "mstd/partition.hpp"

namespace mstd::search {

/// Fewest elements any MSTD set can have; used to prune exhaustive searches.
inline constexpr int kMinMstdSize = 8;

struct FringeSearchOptions {
  fringe::PairConditions conditions = fringe::PairConditions::Numbered;
  std::uint64_t max_candidates = std::uint64_t{1} << 28;
  unsigned threads = 0;  ///< 0 = thread_count()
};

/// All ordered partitions (A1, A2) of [1, 2n] meeting the chosen base-pair conditions.
/// Elements [1,4], n, n+1, [2n-3,2n] are forced into A1 and [5,7], [2n-6,2n-4]
/// into A2; the remaining 2n-16 elements are enumerated. Sorted by A1's
/// 0/1 membership word, lowest first. Requires 10 <= n <= 31.
std::vector<fringe::BasePair> enumerate_fringe_pairs(Int n, const FringeSearchOptions& options = {});

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict v);

struct DecompositionResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Partition> witness;
  std::uint64_t leaves = 0;  ///< complete assignments examined
};

/// Exhaustive search for a partition of [1, r] into k MSTD sets (r <= 63).
/// `budget` caps the number of complete assignments examined; the verdict is
/// Unknown when it runs out first. Results do not depend on the thread count.
DecompositionResult exists_k_decomposition(Int r, int k, std::uint64_t budget = std::uint64_t{1} << 34,
                                           unsigned threads = 0);

struct FeasibilityRow {
  Int r = 0;
  Verdict verdict = Verdict::Unknown;
  std::optional<Partition> witness;
};

struct FeasibilityTable {
  int k = 0;
  std::vector<FeasibilityRow> rows;
  std::optional<Int> first_feasible;
  /// Values of r answered No although a smaller r in the table was Yes.
  std::vector<Int> non_monotonic;
};

FeasibilityTable feasibility_table(int k, Int r_min, Int r_max, std::uint64_t budget = std::uint64_t{1} << 34,
                                   unsigned threads = 0);

struct MinCardinality {
  std::optional<std::size_t> size;
  std::optional<IntSet> witness;  ///< first MSTD set found in lexicographic order of that size
};

/// Smallest |A| over MSTD subsets A of [0, span_bound] (span_bound <= 40).
MinCardinality min_mstd_cardinality(Int span_bound);

/// Randomized local search for a partition of [1, r] into k MSTD sets (r <= 63).
/// Deterministic for a fixed seed; nullopt if max_steps is exhausted.
std::optional<Partition> local_search_decomposition(Int r, int k, std::uint64_t seed,
                                                    std::uint64_t max_steps = 20'000'000);

}  // namespace mstd::search
