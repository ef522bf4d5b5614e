#include "mstd/probability.hpp"

#include <cmath>
#include <random>

#include "bit_util.hpp"
#include "mstd/parallel.hpp"
#include "mstd/set_ops.hpp"

namespace mstd::probability {

namespace {

Rational pow2_neg(Int e) { return Rational(1, boost::multiprecision::cpp_int(1) << static_cast<unsigned>(e)); }

void check_fringe(const IntSet& l, const IntSet& r, Int n) {
  if (n < 1) throw Error("fringe: n must be positive");
  if (l.min() < 0 || l.max() > n - 1) throw Error("fringe: L must lie in [0, n-1]");
  if (r.min() < n || r.max() > 2 * n - 1) throw Error("fringe: R must lie in [n, 2n-1]");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

FringePair from_one_based(const IntSet& a, Int n) {
  const IntSet z = a.translate(-1);
  auto l = z.restrict_to(0, n - 1), r = z.restrict_to(n, 2 * n - 1);
  if (!l || !r || z.min() < 0 || z.max() > 2 * n - 1) throw Error("from_one_based: set must meet both halves of [1, 2n]");
  return {*l, *r};
}

Int compute_a(const IntSet& l, const IntSet& r, Int n) {
  check_fringe(l, r, n);
  const IntSet ll = sumset(l), rr = sumset(r);
  for (Int a = 2; a <= 2 * n; ++a)
    if (ll.contains_range(n, 2 * n - a) && rr.contains_range(2 * n + a - 2, 3 * n - 2)) return a;
  throw Error("compute_a: no a <= 2n satisfies both inclusions");
}

std::pair<Int, Int> compute_tau(const IntSet& l, const IntSet& r, Int n, Int a) {
  Int tl = 0, tr = 0;
  l.for_each([&](Int i) { tl += i <= n - a + 1; });
  r.for_each([&](Int i) { tr += i >= n + a - 2; });
  return {tl, tr};
}

FringeReport f_value(const IntSet& l, const IntSet& r, Int n) {
  FringeReport rep;
  rep.n = n;
  rep.a = compute_a(l, r, n);
  std::tie(rep.tau_l, rep.tau_r) = compute_tau(l, r, n, rep.a);
  rep.size_l = static_cast<Int>(l.size());
  rep.size_r = static_cast<Int>(r.size());
  rep.f = Rational(rep.a - 2) * (pow2_neg(rep.tau_r) + pow2_neg(rep.tau_l)) +
          Rational(6) * (pow2_neg(rep.size_l) + pow2_neg(rep.size_r));
  return rep;
}

SufficientCondition sufficient_condition(const std::vector<FringePair>& pairs, Int n) {
  SufficientCondition out;
  auto& v = out.violations;
  if (pairs.empty()) v.push_back("no pairs given");
  std::vector<IntSet> sets;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const std::string tag = "pair " + std::to_string(i + 1) + ": ";
    if (p.l.min() < 0 || p.l.max() > n - 1) v.push_back(tag + "L leaves [0, n-1]");
    if (p.r.min() < n || p.r.max() > 2 * n - 1) v.push_back(tag + "R leaves [n, 2n-1]");
    const IntSet a = p.l.unite(p.r);
    if (!is_mstd(a)) v.push_back(tag + "L+R is not MSTD");
    if (n > a.max() - a.min() || !is_p(a, n)) v.push_back(tag + "L+R is not P_n");
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (!sets[j].disjoint_from(a)) v.push_back(tag + "intersects pair " + std::to_string(j + 1));
    sets.push_back(a);
  }
  if (!sets.empty() && !(set_union(sets) == IntSet::interval(0, 2 * n - 1)))
    v.push_back("pairs do not cover [0, 2n-1]");

  for (const auto& p : pairs) {
    try {
      out.reports.push_back(f_value(p.l, p.r, n));
      out.sum_f += out.reports.back().f;
    } catch (const Error& e) {
      v.push_back(e.what());
    }
  }
  out.pass = v.empty() && out.sum_f < 1;
  return out;
}

Estimate wilson(std::uint64_t successes, std::uint64_t trials) {
  Estimate e;
  e.trials = trials;
  e.successes = successes;
  if (trials == 0) return e;
  constexpr double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double denom = 1 + z * z / nt;
  const double centre = (p + z * z / (2 * nt)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
  e.proportion = p;
  e.ci_low = std::max(0.0, centre - half);
  e.ci_high = std::min(1.0, centre + half);
  e.std_error = std::sqrt(p * (1 - p) / nt);
  return e;
}

Estimate monte_carlo_proportion(const std::vector<FringePair>& pairs, Int n, Int m, std::uint64_t trials,
                                std::uint64_t seed, unsigned threads) {
  if (pairs.empty()) throw Error("monte_carlo_proportion: no pairs given");
  if (m < 1) throw Error("monte_carlo_proportion: m must be at least 1");
  if (trials < 1) throw Error("monte_carlo_proportion: trials must be at least 1");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check_fringe(pairs[i].l, pairs[i].r, n);
    for (std::size_t j = 0; j < i; ++j)
      if (!pairs[i].l.unite(pairs[i].r).disjoint_from(pairs[j].l.unite(pairs[j].r)))
        throw Error("monte_carlo_proportion: pairs must be disjoint");
  }

  const std::size_t k = pairs.size();
  const std::size_t width = static_cast<std::size_t>(2 * n + m);
  // Fixed bits of each S_i in [0, 2n+m-1].
  std::vector<std::vector<Word>> fixed(k, std::vector<Word>(words_for(width), 0));
  for (std::size_t i = 0; i < k; ++i) {
    pairs[i].l.for_each([&](Int x) { detail::set_bit(fixed[i], static_cast<std::size_t>(x)); });
    pairs[i].r.for_each([&](Int x) { detail::set_bit(fixed[i], static_cast<std::size_t>(x + m)); });
  }

  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> wins(blocks, 0);
  parallel_for(
      blocks,
      [&](std::size_t b) {
        SumDiffCounter counter;
        std::vector<std::vector<Word>> sets(k);
        const std::uint64_t end = std::min<std::uint64_t>(trials, (b + 1) * kBlock);
        for (std::uint64_t t = b * kBlock; t < end; ++t) {
          std::mt19937_64 rng(splitmix64(seed ^ splitmix64(t)));
          std::uniform_int_distribution<std::size_t> part(0, k - 1);
          for (std::size_t i = 0; i < k; ++i) sets[i] = fixed[i];
          for (Int x = n; x < n + m; ++x) detail::set_bit(sets[part(rng)], static_cast<std::size_t>(x));
          bool all = true;
          for (std::size_t i = 0; i < k && all; ++i) {
            // Anchor each set at its minimum before counting.
            std::size_t lo = 0;
            while (!detail::test_bit(sets[i], lo)) ++lo;
            std::size_t hi = width - 1;
            while (!detail::test_bit(sets[i], hi)) --hi;
            const auto bits = detail::extract(sets[i], lo, hi - lo + 1);
            all = counter.count(bits, hi - lo + 1).mstd();
          }
          wins[b] += all;
        }
      },
      threads);

  std::uint64_t total = 0;
  for (auto w : wins) total += w;
  return wilson(total, trials);
}

}  // namespace mstd::probability
