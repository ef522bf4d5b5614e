#include "mstd/set_ops.hpp"

#include "bit_util.hpp"

namespace mstd {

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::MSTD: return "MSTD";
    case Dominance::Balanced: return "balanced";
    case Dominance::DifferenceDominated: return "difference-dominated";
  }
  return "balanced";
}

namespace {

std::vector<Word> sum_bits(const IntSet& a, Kernel kernel) {
  return bool_convolve(a.words(), a.span(), a.words(), a.span(), kernel);
}

// Bit s stands for the difference s - (span - 1).
std::vector<Word> diff_bits(const IntSet& a, Kernel kernel) {
  const auto rev = detail::reversed(a.words(), a.span());
  return bool_convolve(a.words(), a.span(), rev, a.span(), kernel);
}

void check_n(const IntSet& a, Int n) {
  if (n < 0 || n > a.max() - a.min()) throw Error("P_n check: n must lie in [0, max - min]");
}

std::vector<Int> zeros_of(const std::vector<Word>& bits, std::size_t nbits, Int origin) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < nbits; ++i)
    if (!detail::test_bit(bits, i)) out.push_back(origin + static_cast<Int>(i));
  return out;
}

}  // namespace

IntSet sumset(const IntSet& a, Kernel kernel) {
  const auto bits = sum_bits(a, kernel);
  return IntSet::from_bits(2 * a.min(), bits, 2 * a.span() - 1);
}

IntSet diffset(const IntSet& a, Kernel kernel) {
  const auto bits = diff_bits(a, kernel);
  return IntSet::from_bits(-(a.max() - a.min()), bits, 2 * a.span() - 1);
}

SumDiffProfile profile(const IntSet& a, Kernel kernel) {
  const std::size_t width = 2 * a.span() - 1;
  const auto sums = sum_bits(a, kernel);
  const auto diffs = diff_bits(a, kernel);
  SumDiffProfile p;
  p.sum_count = detail::popcount(sums);
  p.diff_count = detail::popcount(diffs);
  p.missing_sums = zeros_of(sums, width, 2 * a.min());
  p.missing_diffs = zeros_of(diffs, width, -(a.max() - a.min()));
  p.dominance = p.sum_count > p.diff_count    ? Dominance::MSTD
                : p.sum_count == p.diff_count ? Dominance::Balanced
                                              : Dominance::DifferenceDominated;
  return p;
}

bool is_sp(const IntSet& a, Int n) {
  check_n(a, n);
  const auto bits = sum_bits(a, Kernel::Auto);
  const auto width = static_cast<Int>(2 * a.span() - 1);
  if (n > width - 1 - n) return true;
  return detail::all_set(bits, static_cast<std::size_t>(n), static_cast<std::size_t>(width - 2 * n));
}

bool is_dp(const IntSet& a, Int n) {
  check_n(a, n);
  const auto bits = diff_bits(a, Kernel::Auto);
  const auto width = static_cast<Int>(2 * a.span() - 1);
  if (n > width - 1 - n) return true;
  return detail::all_set(bits, static_cast<std::size_t>(n), static_cast<std::size_t>(width - 2 * n));
}

bool is_p(const IntSet& a, Int n) { return is_sp(a, n) && is_dp(a, n); }

IntSet affine(const IntSet& a, Int scale, Int shift) {
  if (scale == 0) throw Error("affine: scale must be nonzero");
  std::vector<Int> out;
  out.reserve(a.size());
  a.for_each([&](Int x) { out.push_back(scale * x + shift); });
  return IntSet::from_values(out);
}

// SumDiffCounter

SumDiffCounter::Counts SumDiffCounter::count(std::span<const Word> bits, std::size_t nbits) {
  nbits_ = nbits;
  const std::size_t width = 2 * nbits - 1;
  const std::size_t nw = words_for(width);
  sums_.assign(nw, 0);
  diffs_.assign(nw, 0);
  rev_.assign(words_for(nbits), 0);
  for (std::size_t w = 0; w < words_for(nbits); ++w) {
    Word x = bits[w];
    while (x) {
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(x));
      detail::set_bit(rev_, nbits - 1 - i);
      x &= x - 1;
    }
  }
  const auto src = bits.first(words_for(nbits));
  for (std::size_t w = 0; w < src.size(); ++w) {
    Word x = src[w];
    while (x) {
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(x));
      detail::or_shifted(sums_, src, i);
      detail::or_shifted(diffs_, rev_, i);
      x &= x - 1;
    }
  }
  return {detail::popcount(sums_), detail::popcount(diffs_)};
}

bool SumDiffCounter::sums_cover_inner(std::size_t n) const {
  const std::size_t width = 2 * nbits_ - 1;
  if (2 * n >= width) return true;
  return detail::all_set(sums_, n, width - 2 * n);
}

bool SumDiffCounter::diffs_cover_inner(std::size_t n) const {
  const std::size_t width = 2 * nbits_ - 1;
  if (2 * n >= width) return true;
  return detail::all_set(diffs_, n, width - 2 * n);
}

bool SumDiffCounter::has_sum(std::size_t offset) const {
  return offset < 2 * nbits_ - 1 && detail::test_bit(sums_, offset);
}

// SmallCounts

namespace {

int popcount128(unsigned __int128 x) {
  return __builtin_popcountll(static_cast<std::uint64_t>(x)) + __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

bool covers128(unsigned __int128 x, int lo, int hi) {
  if (lo > hi) return true;
  const int len = hi - lo + 1;
  const unsigned __int128 mask = len >= 128 ? ~static_cast<unsigned __int128>(0)
                                            : ((static_cast<unsigned __int128>(1) << len) - 1);
  return ((x >> lo) & mask) == mask;
}

}  // namespace

int SmallCounts::sum_count() const { return popcount128(sums); }
int SmallCounts::diff_count() const { return popcount128(diffs); }
bool SmallCounts::sp(int n) const { return covers128(sums, n, 2 * (span - 1) - n); }
bool SmallCounts::dp(int n) const { return covers128(diffs, n, 2 * (span - 1) - n); }

SmallCounts small_counts(std::uint64_t bits) {
  SmallCounts c;
  if (!bits) return c;
  bits >>= __builtin_ctzll(bits);
  c.span = 64 - __builtin_clzll(bits);
  std::uint64_t rev = 0;
  for (std::uint64_t x = bits; x; x &= x - 1) rev |= std::uint64_t{1} << (c.span - 1 - __builtin_ctzll(x));
  const unsigned __int128 wide = bits;
  const unsigned __int128 wide_rev = rev;
  for (std::uint64_t x = bits; x; x &= x - 1) {
    const int i = __builtin_ctzll(x);
    c.sums |= wide << i;
    c.diffs |= wide_rev << i;
  }
  return c;
}

}  // namespace mstd
