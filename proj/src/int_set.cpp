#include "mstd/int_set.hpp"

#include <algorithm>
#include <sstream>

#include "bit_util.hpp"

namespace mstd {

IntSet IntSet::from_values(std::span<const Int> values) {
  if (values.empty()) throw Error("IntSet: empty sets are not representable");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const Int lo = *lo_it;
  const auto nbits = static_cast<std::size_t>(*hi_it - lo) + 1;
  std::vector<Word> words(words_for(nbits), 0);
  for (Int v : values) detail::set_bit(words, static_cast<std::size_t>(v - lo));
  return from_bits(lo, words, nbits);
}

IntSet IntSet::from_bits(Int offset, std::span<const Word> words, std::size_t nbits) {
  nbits = std::min(nbits, words.size() * kWordBits);
  std::size_t first = nbits;
  for (std::size_t w = 0; w < words_for(nbits); ++w) {
    Word word = words[w];
    if (w == words_for(nbits) - 1 && nbits % kWordBits) word &= detail::low_mask(nbits % kWordBits);
    if (word) {
      first = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(word));
      break;
    }
  }
  if (first >= nbits) throw Error("IntSet: empty sets are not representable");
  std::size_t last = first;
  for (std::size_t w = words_for(nbits); w-- > 0;) {
    Word word = words[w];
    if (w == words_for(nbits) - 1 && nbits % kWordBits) word &= detail::low_mask(nbits % kWordBits);
    if (word) {
      last = w * kWordBits + 63 - static_cast<std::size_t>(__builtin_clzll(word));
      break;
    }
  }

  IntSet s;
  s.min_ = offset + static_cast<Int>(first);
  s.span_ = last - first + 1;
  s.bits_ = detail::extract(words, first, s.span_);
  s.size_ = detail::popcount(s.bits_);
  return s;
}

IntSet IntSet::interval(Int first, Int last, Int step) {
  if (step <= 0) throw Error("IntSet::interval: step must be positive");
  if (first > last) throw Error("IntSet::interval: empty interval");
  const auto nbits = static_cast<std::size_t>(last - first) + 1;
  std::vector<Word> words(words_for(nbits), 0);
  if (step == 1) {
    detail::set_range(words, 0, nbits);
  } else {
    for (Int x = first; x <= last; x += step) detail::set_bit(words, static_cast<std::size_t>(x - first));
  }
  return from_bits(first, words, nbits);
}

bool IntSet::contains(Int x) const {
  if (x < min_ || x > max()) return false;
  return detail::test_bit(bits_, static_cast<std::size_t>(x - min_));
}

std::vector<Int> IntSet::values() const {
  std::vector<Int> out;
  out.reserve(size_);
  for_each([&](Int x) { out.push_back(x); });
  return out;
}

bool IntSet::contains_range(Int lo, Int hi) const {
  if (lo > hi) return true;
  if (lo < min_ || hi > max()) return false;
  return detail::all_set(bits_, static_cast<std::size_t>(lo - min_), static_cast<std::size_t>(hi - lo) + 1);
}

namespace {

struct Window {
  Int lo;
  std::size_t nbits;
};

Window common_window(const IntSet& a, const IntSet& b) {
  const Int lo = std::min(a.min(), b.min());
  const Int hi = std::max(a.max(), b.max());
  return {lo, static_cast<std::size_t>(hi - lo) + 1};
}

std::vector<Word> placed(const IntSet& a, Window w) {
  std::vector<Word> out(words_for(w.nbits), 0);
  detail::or_shifted(out, a.words(), static_cast<std::size_t>(a.min() - w.lo));
  return out;
}

}  // namespace

bool IntSet::is_subset_of(const IntSet& other) const {
  if (min_ < other.min_ || max() > other.max()) return false;
  const Window w{other.min_, other.span_};
  const auto mine = placed(*this, w);
  for (std::size_t i = 0; i < mine.size(); ++i)
    if (mine[i] & ~other.bits_[i]) return false;
  return true;
}

bool IntSet::disjoint_from(const IntSet& other) const {
  if (max() < other.min_ || other.max() < min_) return true;
  const Window w = common_window(*this, other);
  const auto x = placed(*this, w);
  const auto y = placed(other, w);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] & y[i]) return false;
  return true;
}

IntSet IntSet::unite(const IntSet& other) const {
  const Window w = common_window(*this, other);
  auto x = placed(*this, w);
  detail::or_shifted(x, other.bits_, static_cast<std::size_t>(other.min_ - w.lo));
  return from_bits(w.lo, x, w.nbits);
}

std::optional<IntSet> IntSet::intersect(const IntSet& other) const {
  if (max() < other.min_ || other.max() < min_) return std::nullopt;
  const Window w = common_window(*this, other);
  auto x = placed(*this, w);
  const auto y = placed(other, w);
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) any |= (x[i] &= y[i]) != 0;
  if (!any) return std::nullopt;
  return from_bits(w.lo, x, w.nbits);
}

std::optional<IntSet> IntSet::minus(const IntSet& other) const {
  const Window w = common_window(*this, other);
  auto x = placed(*this, w);
  const auto y = placed(other, w);
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) any |= (x[i] &= ~y[i]) != 0;
  if (!any) return std::nullopt;
  return from_bits(w.lo, x, w.nbits);
}

std::optional<IntSet> IntSet::restrict_to(Int lo, Int hi) const {
  lo = std::max(lo, min_);
  hi = std::min(hi, max());
  if (lo > hi) return std::nullopt;
  const auto first = static_cast<std::size_t>(lo - min_);
  const auto nbits = static_cast<std::size_t>(hi - lo) + 1;
  const auto window = detail::extract(bits_, first, nbits);
  if (detail::popcount(window) == 0) return std::nullopt;
  return from_bits(lo, window, nbits);
}

IntSet IntSet::translate(Int shift) const {
  IntSet s = *this;
  s.min_ += shift;
  return s;
}

IntSet set_union(std::span<const IntSet> sets) {
  if (sets.empty()) throw Error("set_union: no sets given");
  Int lo = sets.front().min();
  Int hi = sets.front().max();
  for (const auto& s : sets) {
    lo = std::min(lo, s.min());
    hi = std::max(hi, s.max());
  }
  const auto nbits = static_cast<std::size_t>(hi - lo) + 1;
  std::vector<Word> words(words_for(nbits), 0);
  for (const auto& s : sets) detail::or_shifted(words, s.words(), static_cast<std::size_t>(s.min() - lo));
  return IntSet::from_bits(lo, words, nbits);
}

std::string to_string(const IntSet& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  a.for_each([&](Int x) {
    if (!first) os << ',';
    os << x;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace mstd
