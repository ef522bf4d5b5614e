#pragma once

// Word-level helpers shared by the set kernels. Bit i lives in word i/64 at position i%64.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd::detail {

inline Word low_mask(std::size_t nbits) { return nbits >= kWordBits ? ~Word{0} : (Word{1} << nbits) - 1; }

inline void set_bit(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline bool test_bit(std::span<const Word> w, std::size_t i) { return (w[i / kWordBits] >> (i % kWordBits)) & 1U; }

inline std::size_t popcount(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
  return c;
}

inline void set_range(std::span<Word> w, std::size_t first, std::size_t count) {
  for (std::size_t i = first; i < first + count;) {
    const std::size_t bit = i % kWordBits;
    const std::size_t take = std::min(kWordBits - bit, first + count - i);
    w[i / kWordBits] |= low_mask(take) << bit;
    i += take;
  }
}

inline bool all_set(std::span<const Word> w, std::size_t first, std::size_t count) {
  for (std::size_t i = first; i < first + count;) {
    const std::size_t bit = i % kWordBits;
    const std::size_t take = std::min(kWordBits - bit, first + count - i);
    const Word m = low_mask(take) << bit;
    if ((w[i / kWordBits] & m) != m) return false;
    i += take;
  }
  return true;
}

/// dst |= src << shift, discarding bits beyond dst.
inline void or_shifted(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < src.size() && i + ws < n; ++i) {
    const Word x = src[i];
    if (!x) continue;
    dst[i + ws] |= x << bs;
    if (bs && i + ws + 1 < n) dst[i + ws + 1] |= x >> (kWordBits - bs);
  }
}

/// Bits [first, first+nbits) of src as a fresh zero-padded vector.
inline std::vector<Word> extract(std::span<const Word> src, std::size_t first, std::size_t nbits) {
  std::vector<Word> out(words_for(nbits), 0);
  const std::size_t ws = first / kWordBits;
  const std::size_t bs = first % kWordBits;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = i + ws;
    if (j >= src.size()) break;
    Word x = src[j] >> bs;
    if (bs && j + 1 < src.size()) x |= src[j + 1] << (kWordBits - bs);
    out[i] = x;
  }
  if (nbits % kWordBits && !out.empty()) out.back() &= low_mask(nbits % kWordBits);
  return out;
}

/// Bit-reversal of the first nbits: bit i -> bit nbits-1-i.
inline std::vector<Word> reversed(std::span<const Word> src, std::size_t nbits) {
  std::vector<Word> out(words_for(nbits), 0);
  for (std::size_t w = 0; w < src.size(); ++w) {
    Word x = src[w];
    while (x) {
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(x));
      if (i < nbits) set_bit(out, nbits - 1 - i);
      x &= x - 1;
    }
  }
  return out;
}

}  // namespace mstd::detail
