#pragma once

#include <string>
#include <vector>

#include "mstd/int_set.hpp"
#include "mstd/kernels.hpp"

namespace mstd {

/// Ordered list of sets that are meant to partition [lo, hi].
struct Partition {
  Int lo = 1;
  Int hi = 0;
  std::vector<IntSet> parts;
};

struct PartitionCheck {
  bool disjoint = true;
  bool covers = true;
  bool all_mstd = true;
  std::vector<std::string> issues;

  bool ok() const { return disjoint && covers && all_mstd; }
};

/// Verifies pairwise disjointness, exact coverage of [lo, hi] and, optionally,
/// that every part is MSTD.
PartitionCheck check_partition(const Partition& p, bool require_mstd = true, Kernel kernel = Kernel::Auto);

}  // namespace mstd
