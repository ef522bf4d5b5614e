#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstd {

using Int = std::int64_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

/// Error raised when an input violates an operation's precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t words_for(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

/// Finite nonempty set of integers.
///
/// Stored as a bit vector anchored at the minimum element: bit i set means
/// min() + i is a member. Values are immutable once constructed.
class IntSet {
 public:
  /// Builds from arbitrary (unsorted, possibly repeated) values. Throws on empty input.
  static IntSet from_values(std::span<const Int> values);
  static IntSet from_values(std::initializer_list<Int> values) {
    return from_values(std::span<const Int>(values.begin(), values.size()));
  }
  /// Builds from a bit vector where bit i stands for offset + i. Leading and
  /// trailing zero bits are trimmed. Throws if no bit is set.
  static IntSet from_bits(Int offset, std::span<const Word> words, std::size_t nbits);
  /// {first, first+step, ...} up to last inclusive. Throws if empty or step <= 0.
  static IntSet interval(Int first, Int last, Int step = 1);

  Int min() const { return min_; }
  Int max() const { return min_ + static_cast<Int>(span_) - 1; }
  /// Number of integers between min and max inclusive.
  std::size_t span() const { return span_; }
  std::size_t size() const { return size_; }

  bool contains(Int x) const;
  std::vector<Int> values() const;
  const std::vector<Word>& words() const { return bits_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      Word word = bits_[w];
      while (word) {
        const int b = __builtin_ctzll(word);
        f(min_ + static_cast<Int>(w * kWordBits + b));
        word &= word - 1;
      }
    }
  }

  bool operator==(const IntSet& other) const {
    return min_ == other.min_ && span_ == other.span_ && bits_ == other.bits_;
  }

  bool is_subset_of(const IntSet& other) const;
  bool disjoint_from(const IntSet& other) const;
  /// True if every element of [lo, hi] is a member (vacuously true when lo > hi).
  bool contains_range(Int lo, Int hi) const;

  IntSet unite(const IntSet& other) const;
  std::optional<IntSet> intersect(const IntSet& other) const;
  std::optional<IntSet> minus(const IntSet& other) const;
  /// Elements inside [lo, hi], or nullopt if none.
  std::optional<IntSet> restrict_to(Int lo, Int hi) const;
  IntSet translate(Int shift) const;

 private:
  IntSet() = default;

  Int min_ = 0;
  std::size_t span_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> bits_;
};

IntSet set_union(std::span<const IntSet> sets);

std::string to_string(const IntSet& a);

}  // namespace mstd
