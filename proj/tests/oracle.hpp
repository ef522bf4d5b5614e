#pragma once

// Reference implementations used only by the tests. They work on plain
// sorted vectors and enumerate all pairs, sharing no code with the library kernels.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Values = std::vector<Int>;

inline std::set<Int> sums(const Values& a) {
  std::set<Int> out;
  for (Int x : a)
    for (Int y : a) out.insert(x + y);
  return out;
}

inline std::set<Int> diffs(const Values& a) {
  std::set<Int> out;
  for (Int x : a)
    for (Int y : a) out.insert(x - y);
  return out;
}

struct Counts {
  std::size_t sums = 0;
  std::size_t diffs = 0;
  bool mstd() const { return sums > diffs; }
};

// Pairwise marking into flat tables; fine for a few thousand elements.
inline Counts counts(const Values& a) {
  const Int lo = *std::min_element(a.begin(), a.end());
  const Int hi = *std::max_element(a.begin(), a.end());
  const std::size_t width = static_cast<std::size_t>(2 * (hi - lo) + 1);
  std::vector<char> s(width, 0), d(width, 0);
  for (Int x : a)
    for (Int y : a) {
      s[static_cast<std::size_t>(x + y - 2 * lo)] = 1;
      d[static_cast<std::size_t>(x - y + (hi - lo))] = 1;
    }
  Counts c;
  for (std::size_t i = 0; i < width; ++i) {
    c.sums += s[i];
    c.diffs += d[i];
  }
  return c;
}

inline bool mstd(const Values& a) { return counts(a).mstd(); }

inline bool covers(const std::set<Int>& s, Int lo, Int hi) {
  for (Int x = lo; x <= hi; ++x)
    if (!s.count(x)) return false;
  return true;
}

inline bool sp(const Values& a, Int n) {
  return covers(sums(a), 2 * a.front() + n, 2 * a.back() - n);
}

inline bool dp(const Values& a, Int n) {
  const Int w = a.back() - a.front();
  return covers(diffs(a), n - w, w - n);
}

inline bool is_ap(const Values& a) {
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a[i] - a[i - 1] != a[1] - a[0]) return false;
  return true;
}

inline Values range(Int lo, Int hi, Int step = 1) {
  Values v;
  for (Int x = lo; x <= hi; x += step) v.push_back(x);
  return v;
}

inline Values unite(std::initializer_list<Values> parts) {
  Values out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Random nonempty subset of [lo, hi] with the given density.
inline Values random_set(std::mt19937_64& rng, Int lo, Int hi, double density) {
  std::bernoulli_distribution coin(density);
  Values v;
  for (Int x = lo; x <= hi; ++x)
    if (coin(rng)) v.push_back(x);
  if (v.empty()) v.push_back(lo);
  return v;
}

}  // namespace oracle
