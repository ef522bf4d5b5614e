#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mstd/int_set.hpp"

namespace mstd {

/// A set written as its least element followed by successive gaps.
struct GapNotation {
  Int start = 0;
  std::vector<Int> gaps;

  bool operator==(const GapNotation&) const = default;
};

GapNotation to_gaps(const IntSet& a);
/// Throws on a non-positive gap.
IntSet from_gaps(const GapNotation& g);

/// Parses "(a|d1,d2,...)"; "(a|)" is the singleton {a}.
IntSet parse_spohn(std::string_view text);
std::string format_spohn(const IntSet& a);

/// Parses "a..b" or "a..b:s", optionally wrapped in square brackets.
IntSet parse_stepped(std::string_view text);

/// Any of the three literal forms: JSON integer array, gap notation, stepped interval.
IntSet parse_set_literal(std::string_view text);

}  // namespace mstd
