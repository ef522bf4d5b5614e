#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mstd/int_set.hpp"
#include "mstd/kernels.hpp"

namespace mstd {

enum class Dominance { MSTD, Balanced, DifferenceDominated };

std::string_view to_string(Dominance d);

/// Sum and difference statistics of a set A.
struct SumDiffProfile {
  std::size_t sum_count = 0;   ///< |A+A|
  std::size_t diff_count = 0;  ///< |A-A|
  std::vector<Int> missing_sums;   ///< [2 min, 2 max] \ (A+A)
  std::vector<Int> missing_diffs;  ///< [-(max-min), max-min] \ (A-A)
  Dominance dominance = Dominance::Balanced;

  bool is_mstd() const { return dominance == Dominance::MSTD; }
  /// |A+A| - |A-A|
  long long surplus() const { return static_cast<long long>(sum_count) - static_cast<long long>(diff_count); }
};

IntSet sumset(const IntSet& a, Kernel kernel = Kernel::Auto);
IntSet diffset(const IntSet& a, Kernel kernel = Kernel::Auto);
SumDiffProfile profile(const IntSet& a, Kernel kernel = Kernel::Auto);

inline bool is_mstd(const IntSet& a, Kernel kernel = Kernel::Auto) { return profile(a, kernel).is_mstd(); }

/// A+A contains [2 min + n, 2 max - n]. Throws unless 0 <= n <= max - min.
bool is_sp(const IntSet& a, Int n);
/// A-A contains [n - (max - min), (max - min) - n]. Same range check as is_sp.
bool is_dp(const IntSet& a, Int n);
bool is_p(const IntSet& a, Int n);

/// {scale * x + shift : x in A}. Throws if scale == 0.
IntSet affine(const IntSet& a, Int scale, Int shift);

/// Allocation-free sum/difference counting for hot loops over many small sets.
///
/// Input bit vectors are anchored so that bit 0 is the minimum; coverage
/// queries are relative to the last counted set.
class SumDiffCounter {
 public:
  struct Counts {
    std::size_t sums = 0;
    std::size_t diffs = 0;
    bool mstd() const { return sums > diffs; }
  };

  Counts count(std::span<const Word> bits, std::size_t nbits);
  /// Sum-side coverage of [2 min + n, 2 max - n].
  bool sums_cover_inner(std::size_t n) const;
  /// Difference-side coverage of [n - span + 1, span - 1 - n].
  bool diffs_cover_inner(std::size_t n) const;
  /// Whether min + min + offset lies in A+A.
  bool has_sum(std::size_t offset) const;

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> sums_;
  std::vector<Word> diffs_;
  std::vector<Word> rev_;
};

/// The same counts for sets of span at most 64 held in one word (bit 0 = min).
struct SmallCounts {
  unsigned __int128 sums = 0;   ///< bit s: 2 min + s in A+A
  unsigned __int128 diffs = 0;  ///< bit s: s - (span - 1) in A-A
  int span = 0;

  int sum_count() const;
  int diff_count() const;
  bool mstd() const { return sum_count() > diff_count(); }
  bool sp(int n) const;
  bool dp(int n) const;
};

SmallCounts small_counts(std::uint64_t bits);

}  // namespace mstd
