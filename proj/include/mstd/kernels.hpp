#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

/// Boolean convolution backends used for sumsets and difference sets.
enum class Kernel {
  Auto,         ///< pick by estimated cost
  ShiftOr,      ///< OR of one operand shifted by each member of the other
  Convolution,  ///< number-theoretic transform, then threshold counts at > 0
};

std::string_view to_string(Kernel k);
Kernel parse_kernel(std::string_view name);

/// Kernel that Auto resolves to for operands of nx / ny bits holding px / py members.
Kernel choose_kernel(std::size_t nx, std::size_t px, std::size_t ny, std::size_t py);

/// OR-convolution of two bit vectors: result bit s is set iff some i + j = s with
/// x bit i and y bit j both set. The result holds nx + ny - 1 bits.
std::vector<Word> bool_convolve(std::span<const Word> x, std::size_t nx, std::span<const Word> y,
                                std::size_t ny, Kernel kernel = Kernel::Auto);

}  // namespace mstd
