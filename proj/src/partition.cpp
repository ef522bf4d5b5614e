#include "mstd/partition.hpp"

#include "mstd/set_ops.hpp"

namespace mstd {

PartitionCheck check_partition(const Partition& p, bool require_mstd, Kernel kernel) {
  PartitionCheck c;
  if (p.parts.empty() || p.lo > p.hi) {
    c.covers = false;
    c.issues.push_back("partition has no parts or an empty interval");
    return c;
  }
  std::size_t total = 0;
  for (const auto& s : p.parts) total += s.size();
  const IntSet all = set_union(p.parts);
  const auto width = static_cast<std::size_t>(p.hi - p.lo) + 1;
  if (total != all.size()) {
    c.disjoint = false;
    c.issues.push_back("parts overlap (" + std::to_string(total - all.size()) + " repeated elements)");
  }
  if (all.min() != p.lo || all.max() != p.hi || all.size() != width) {
    c.covers = false;
    if (all.min() < p.lo || all.max() > p.hi) c.issues.push_back("parts leave the interval");
    const auto gaps = IntSet::interval(p.lo, p.hi).minus(all);
    if (gaps) c.issues.push_back("uncovered: " + std::to_string(gaps->size()) + " elements starting at " + std::to_string(gaps->min()));
  }
  if (require_mstd) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      const auto prof = profile(p.parts[i], kernel);
      if (!prof.is_mstd()) {
        c.all_mstd = false;
        c.issues.push_back("part " + std::to_string(i) + " is " + std::string(to_string(prof.dominance)));
      }
    }
  }
  return c;
}

}  // namespace mstd
