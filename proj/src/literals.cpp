#include "mstd/literals.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace mstd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  Int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) throw Error("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

GapNotation to_gaps(const IntSet& a) {
  GapNotation g{a.min(), {}};
  Int prev = a.min();
  a.for_each([&](Int x) {
    if (x != prev) g.gaps.push_back(x - prev);
    prev = x;
  });
  return g;
}

IntSet from_gaps(const GapNotation& g) {
  std::vector<Int> v{g.start};
  v.reserve(g.gaps.size() + 1);
  for (Int d : g.gaps) {
    if (d <= 0) throw Error("gap notation: gaps must be positive");
    v.push_back(v.back() + d);
  }
  return IntSet::from_values(v);
}

IntSet parse_spohn(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') throw Error("gap notation must look like (a|d1,d2,...)");
  const auto body = text.substr(1, text.size() - 2);
  const auto bar = body.find('|');
  if (bar == std::string_view::npos) throw Error("gap notation: missing '|'");
  GapNotation g{parse_int(body.substr(0, bar), "start"), {}};
  auto rest = trim(body.substr(bar + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    g.gaps.push_back(parse_int(rest.substr(0, comma), "gap"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) throw Error("gap notation: trailing comma");
  }
  return from_gaps(g);
}

std::string format_spohn(const IntSet& a) {
  const auto g = to_gaps(a);
  std::ostringstream os;
  os << '(' << g.start << '|';
  for (std::size_t i = 0; i < g.gaps.size(); ++i) os << (i ? "," : "") << g.gaps[i];
  os << ')';
  return os.str();
}

IntSet parse_stepped(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw Error("stepped interval: unbalanced brackets");
    text = trim(text.substr(1, text.size() - 2));
  }
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw Error("stepped interval must look like a..b or a..b:s");
  const Int first = parse_int(text.substr(0, dots), "interval start");
  auto tail = text.substr(dots + 2);
  Int step = 1;
  if (const auto colon = tail.find(':'); colon != std::string_view::npos) {
    step = parse_int(tail.substr(colon + 1), "interval step");
    tail = tail.substr(0, colon);
  }
  const Int last = parse_int(tail, "interval end");
  if (step <= 0) throw Error("stepped interval: step must be positive");
  if (first > last) throw Error("stepped interval: empty range");
  return IntSet::interval(first, last, step);
}

IntSet parse_set_literal(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error("empty set literal");
  if (text.front() == '(') return parse_spohn(text);
  if (text.find("..") != std::string_view::npos) return parse_stepped(text);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("set literal is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error("JSON set literal must be an array of integers");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("JSON set literal must be an array of integers");
    v.push_back(x.get<Int>());
  }
  if (v.empty()) throw Error("empty sets are not representable");
  return IntSet::from_values(v);
}

}  // namespace mstd
