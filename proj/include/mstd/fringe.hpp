#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mstd/int_set.hpp"
#include "mstd/partition.hpp"

namespace mstd::fringe {

/// Two complementary MSTD sets on [1, 2n] whose fringes seed an explicit
/// 2-decomposition of longer intervals.
///
/// Invariants (checked by validate_base_pair):
///   - A1, A2 partition [1, 2n]; Li = Ai within [1, n], Ri = Ai within [n+1, 2n];
///   - [1,4] + {n} in L1, {n+1} + [2n-3, 2n] in R1, [5,7] in L2, [2n-6, 2n-4] in R2;
///   - A1 is MSTD and P_n, A2 is MSTD and P_{n-4}.
struct BasePair {
  IntSet a1, a2;
  IntSet l1, r1, l2, r2;
  Int n = 0;
  bool p_property = true;  ///< A1 is P_n and A2 is P_{n-4}
};

/// Which hypotheses a base pair must meet.
enum class PairConditions {
  Numbered,  ///< the numbered conditions (partition, halves, forced fringes) plus both MSTD
  Full,      ///< additionally A1 is P_n and A2 is P_{n-4}
};

std::string_view to_string(PairConditions c);
PairConditions parse_pair_conditions(std::string_view name);

struct BasePairCheck {
  std::optional<BasePair> pair;
  std::vector<std::string> violations;

  bool ok() const { return pair.has_value(); }
};

BasePairCheck validate_base_pair(const IntSet& a1, const IntSet& a2, Int n,
                                 PairConditions conditions = PairConditions::Full);

/// The pair found by random search for n = 20 and used throughout the worked examples.
BasePair reference_pair();

struct OBlocks {
  IntSet o11, o12, o21, o22;
};

/// Transition blocks between the fringes and the middle. Requires 2k >= n + 4 and m >= 6
/// (below 6 the left and right blocks overlap).
OBlocks build_o_blocks(Int n, Int k, Int m);

/// Split of the middle region [n+2k+6, n+m+2k-1] between the two parts.
struct MiddlePlan {
  IntSet m1, m2;
  Int n = 0, k = 0, m = 0;

  Int region_lo() const { return n + 2 * k + 6; }
  Int region_hi() const { return n + m + 2 * k - 1; }
};

struct Diagnostics {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Scans for a chain of runs of `run` consecutive members of `s` (absent = empty): the first run
/// inside [first_lo, first_hi], each later run starting at most `max_step` after
/// the previous one, the last inside [last_lo, last_hi]. Returns an explanation on
/// failure.
std::optional<std::string> find_chain_failure(const std::optional<IntSet>& s, int run, Int first_lo, Int first_hi, Int max_step,
                                              Int last_lo, Int last_hi);

/// Clause (i): pair chain in M1; (ii): triplet chain in M2; (iii): M1, M2 partition the region.
Diagnostics check_middles(const MiddlePlan& plan);

enum class MiddleStrategy { Canonical, SeededRandom };

std::string_view to_string(MiddleStrategy s);
MiddleStrategy parse_middle_strategy(std::string_view name);

/// Builds a plan that passes check_middles, or throws.
MiddlePlan build_middles(Int n, Int k, Int m, MiddleStrategy strategy = MiddleStrategy::Canonical,
                         std::uint64_t seed = 0);

/// Smallest m >= 7 for which the canonical builder succeeds (scan capped at 64 + 4k).
Int min_middle_length(Int n, Int k);

/// L + O11 + M + O12 + (R + m + 4k + 4) for the first fringe; verified SP_n and MSTD before returning.
/// L + R itself must be MSTD.
/// M may be absent only when the first and last chain windows intersect.
IntSet assemble_ft(const IntSet& left, const IntSet& right, Int n, Int k, Int m, const std::optional<IntSet>& middle);

/// L + O21 + M + O22 + (R + m + 4k + 4) for the second fringe; verified SP_{n-4} and MSTD.
IntSet assemble_ss(const IntSet& left, const IntSet& right, Int n, Int k, Int m, const std::optional<IntSet>& middle);

/// Partition of [1, 2n + m + 4k + 4] into two verified MSTD sets.
Partition two_decompose(const BasePair& base, Int k, Int m, MiddleStrategy strategy = MiddleStrategy::Canonical,
                        std::uint64_t seed = 0);

}  // namespace mstd::fringe
