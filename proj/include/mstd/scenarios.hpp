#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mstd::scenarios {

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Expected-vs-actual lines for one published example.
struct Report {
  std::string name;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

/// remark12, appendixD1, appendixD2, fringe48, baseexp, bounds, corollaryB5.
const std::vector<std::string>& names();

/// Throws mstd::Error for an unknown name.
Report run(std::string_view name);

}  // namespace mstd::scenarios
