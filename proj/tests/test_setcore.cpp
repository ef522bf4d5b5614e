#include <doctest.h>

#include <atomic>
#include <numeric>

#include "mstd/kernels.hpp"
#include "mstd/literals.hpp"
#include "mstd/parallel.hpp"
#include "mstd/partition.hpp"
#include "mstd/set_ops.hpp"
#include "oracle.hpp"

using namespace mstd;

namespace {

IntSet make(const oracle::Values& v) { return IntSet::from_values(v); }

oracle::Values as_values(const std::set<Int>& s) { return {s.begin(), s.end()}; }

const oracle::Values kA1{1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20, 21, 26, 27, 28, 31, 33, 37, 38, 39, 40};
const oracle::Values kA2{5, 6, 7, 10, 12, 16, 17, 18, 19, 22, 23, 24, 25, 29, 30, 32, 34, 35, 36};

}  // namespace

TEST_SUITE("setcore") {
  TEST_CASE("IntSet construction and queries") {
    const auto a = IntSet::from_values({9, 3, 3, -2, 7});
    CHECK(a.min() == -2);
    CHECK(a.max() == 9);
    CHECK(a.size() == 4);
    CHECK(a.span() == 12);
    CHECK(a.values() == std::vector<Int>{-2, 3, 7, 9});
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(4));
    CHECK_FALSE(a.contains(100));
    CHECK_THROWS_AS(IntSet::from_values(std::vector<Int>{}), Error);

    CHECK(IntSet::interval(21, 45, 2).values() == oracle::range(21, 45, 2));
    CHECK(IntSet::interval(21, 46, 2).max() == 45);

    const auto b = IntSet::interval(0, 10);
    CHECK(b.contains_range(2, 8));
    CHECK(b.contains_range(5, 4));
    CHECK_FALSE(a.contains_range(3, 7));
    CHECK(b.minus(b) == std::nullopt);
    CHECK(b.minus(a)->values() == std::vector<Int>{0, 1, 2, 4, 5, 6, 8, 10});
    CHECK(b.intersect(a)->values() == std::vector<Int>{3, 7, 9});
    CHECK(b.restrict_to(20, 30) == std::nullopt);
    CHECK(a.translate(5).values() == std::vector<Int>{3, 8, 12, 14});
    CHECK(a.unite(b).size() == 12);
    CHECK(IntSet::interval(2, 4).is_subset_of(b));
    CHECK(IntSet::interval(20, 24).disjoint_from(b));
    CHECK(to_string(IntSet::from_values({1, 2})) == "{1,2}");
  }

  TEST_CASE("from_bits trims to the occupied range") {
    std::vector<Word> words{0b101000, 0};
    const auto a = IntSet::from_bits(10, words, 100);
    CHECK(a.values() == std::vector<Int>{13, 15});
    CHECK(a.words().size() == 1);
    CHECK_THROWS_AS(IntSet::from_bits(0, std::vector<Word>{0}, 64), Error);
  }

  TEST_CASE("equality is by content across word boundaries") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
      const auto v = oracle::random_set(rng, -70, 200, 0.3);
      auto shuffled = v;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(make(v) == make(shuffled));
      CHECK(make(v).values() == v);
    }
  }

  TEST_CASE("sumset and diffset of the reference sets") {
    const auto a1 = make(kA1), a2 = make(kA2);
    CHECK(sumset(a1) == IntSet::interval(2, 80));
    CHECK(diffset(a1) == *IntSet::interval(-39, 39).minus(IntSet::from_values({-21, 21})));
    CHECK(sumset(a2) == IntSet::interval(10, 72));
    CHECK(diffset(a2) == *IntSet::interval(-31, 31).minus(IntSet::from_values({-21, 21})));
    CHECK(sumset(IntSet::from_values({5})).values() == std::vector<Int>{10});
    CHECK(diffset(IntSet::from_values({7})).values() == std::vector<Int>{0});

    const oracle::Values c{1, 2, 3, 5, 6, 10, 13, 14, 15, 17};
    CHECK(sumset(make(c)).values() == as_values(oracle::sums(c)));
    CHECK(diffset(make(c)).values() == as_values(oracle::diffs(c)));
  }

  TEST_CASE("profile classification") {
    const auto p = profile(make(kA1));
    CHECK(p.sum_count == 79);
    CHECK(p.diff_count == 77);
    CHECK(p.dominance == Dominance::MSTD);
    CHECK(p.missing_diffs == std::vector<Int>{-21, 21});
    CHECK(p.missing_sums.empty());

    const auto q = profile(IntSet::from_values({0, 1, 2}));
    CHECK(q.sum_count == 5);
    CHECK(q.diff_count == 5);
    CHECK(q.dominance == Dominance::Balanced);

    const auto s = profile(IntSet::from_values({0, 2, 3, 4, 7, 11, 12, 14}));
    CHECK(s.sum_count == 26);
    CHECK(s.diff_count == 25);
    CHECK(s.is_mstd());
    CHECK(s.surplus() == 1);

    CHECK(profile(IntSet::from_values({2, 3, 5, 9, 10})).dominance == Dominance::DifferenceDominated);
  }

  TEST_CASE("P_n checks") {
    CHECK(is_p(make(kA1), 20));
    CHECK(is_p(make(kA2), 16));
    CHECK_FALSE(is_sp(IntSet::from_values({0, 5}), 0));
    CHECK_FALSE(is_dp(IntSet::from_values({0, 5}), 0));
    CHECK(is_p(IntSet::from_values({0, 1}), 0));
    CHECK_THROWS_AS(is_p(make(kA1), 40), Error);
    CHECK_THROWS_AS(is_sp(make(kA1), -1), Error);
    CHECK(is_p(make(kA1), 39));
  }

  TEST_CASE("affine maps") {
    CHECK(affine(IntSet::from_values({1, 2, 3}), 4, 0).values() == std::vector<Int>{4, 8, 12});
    CHECK(affine(IntSet::from_values({1, 2, 3}), -1, 10).values() == std::vector<Int>{7, 8, 9});
    CHECK_THROWS_AS(affine(IntSet::from_values({1}), 0, 1), Error);
    const auto odd = affine(make(kA1), 2, 5);
    odd.for_each([](Int x) { CHECK(x % 2 == 1); });
  }

  TEST_CASE("gap notation and literals") {
    CHECK(parse_spohn("(2|1,2,4,1)").values() == std::vector<Int>{2, 3, 5, 9, 10});
    CHECK(parse_spohn("(7|)").values() == std::vector<Int>{7});
    CHECK(parse_spohn("(1|1,1,2,1,4,3,1,1,2)").values() == std::vector<Int>{1, 2, 3, 5, 6, 10, 13, 14, 15, 17});
    CHECK(parse_spohn(" ( -3 | 2 , 2 ) ").values() == std::vector<Int>{-3, -1, 1});
    CHECK(format_spohn(IntSet::from_values({2, 3, 5, 9, 10})) == "(2|1,2,4,1)");
    CHECK(format_spohn(IntSet::from_values({7})) == "(7|)");
    CHECK_THROWS_AS(parse_spohn("(2|1,0)"), Error);
    CHECK_THROWS_AS(parse_spohn("(2|1,-1)"), Error);
    CHECK_THROWS_AS(parse_spohn("2|1"), Error);
    CHECK_THROWS_AS(parse_spohn("(a|1)"), Error);
    CHECK_THROWS_AS(from_gaps({0, {1, 0}}), Error);

    CHECK(parse_stepped("21..45:2") == IntSet::interval(21, 45, 2));
    CHECK(parse_stepped("[1..10]") == IntSet::interval(1, 10));
    CHECK_THROWS_AS(parse_stepped("5..1"), Error);
    CHECK(parse_set_literal("[3, 1, 2]").values() == std::vector<Int>{1, 2, 3});
    CHECK(parse_set_literal("(2|1,2,4,1)").size() == 5);
    CHECK(parse_set_literal("[1..10]").size() == 10);
    CHECK_THROWS_AS(parse_set_literal("[]"), Error);
    CHECK_THROWS_AS(parse_set_literal("hello"), Error);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const auto a = make(oracle::random_set(rng, -20, 60, 0.4));
      const auto g = to_gaps(a);
      CHECK(from_gaps(g) == a);
      CHECK(parse_spohn(format_spohn(a)) == a);
      for (Int d : g.gaps) CHECK(d >= 1);
    }
  }

  TEST_CASE("kernels match the pairwise oracle on random sets") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Int> span(0, 200), off(-100, 100);
    std::uniform_real_distribution<double> dens(0.02, 0.9);
    for (int t = 0; t < 1000; ++t) {
      const Int lo = off(rng);
      const auto v = oracle::random_set(rng, lo, lo + span(rng), dens(rng));
      const auto a = make(v);
      const auto s = as_values(oracle::sums(v)), d = as_values(oracle::diffs(v));
      for (Kernel k : {Kernel::Auto, Kernel::ShiftOr, Kernel::Convolution}) {
        REQUIRE(sumset(a, k).values() == s);
        REQUIRE(diffset(a, k).values() == d);
      }
      const auto p = profile(a);
      CHECK(p.sum_count == s.size());
      CHECK(p.diff_count == d.size());
      CHECK(p.sum_count + p.missing_sums.size() == 2 * a.span() - 1);
      CHECK(p.diff_count + p.missing_diffs.size() == 2 * a.span() - 1);
      CHECK(p.diff_count % 2 == 1);
      for (Int x : p.missing_diffs) CHECK(std::binary_search(p.missing_diffs.begin(), p.missing_diffs.end(), -x));
      CHECK(p.is_mstd() == oracle::mstd(v));
    }
  }

  TEST_CASE("bool_convolve agrees across kernels on unequal operands") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
      const auto x = make(oracle::random_set(rng, 0, 3000, 0.3));
      const auto y = make(oracle::random_set(rng, 0, 1700, 0.05));
      const auto a = bool_convolve(x.words(), x.span(), y.words(), y.span(), Kernel::ShiftOr);
      const auto b = bool_convolve(x.words(), x.span(), y.words(), y.span(), Kernel::Convolution);
      CHECK(a == b);
    }
    CHECK(parse_kernel("shift-or") == Kernel::ShiftOr);
    CHECK(parse_kernel("convolution") == Kernel::Convolution);
    CHECK_THROWS_AS(parse_kernel("fft"), Error);
    CHECK(choose_kernel(100, 50, 100, 50) == Kernel::ShiftOr);
    CHECK(choose_kernel(1 << 20, 1 << 19, 1 << 20, 1 << 19) == Kernel::Convolution);
  }

  TEST_CASE("difference set is symmetric and contains 0") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      const auto d = diffset(make(oracle::random_set(rng, 0, 150, 0.2)));
      CHECK(d.contains(0));
      CHECK(d == affine(d, -1, 0));
      CHECK(d.size() % 2 == 1);
    }
  }

  TEST_CASE("sets of at most three elements are never MSTD") {
    for (Int a = 0; a <= 12; ++a)
      for (Int b = a; b <= 12; ++b)
        for (Int c = b; c <= 12; ++c) CHECK_FALSE(is_mstd(IntSet::from_values({a, b, c})));
  }

  TEST_CASE("arithmetic progressions are balanced with 2|A|-1 sums") {
    for (Int len = 1; len <= 40; ++len)
      for (Int step : {1, 2, 3, 7}) {
        const auto p = profile(IntSet::interval(5, 5 + (len - 1) * step, step));
        CHECK(p.sum_count == static_cast<std::size_t>(2 * len - 1));
        CHECK(p.diff_count == p.sum_count);
      }
  }

  TEST_CASE("MSTD class is invariant under affine maps") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 4);
    const Int scales[] = {1, -1, 2, -2, 4};
    for (int t = 0; t < 200; ++t) {
      const auto a = make(oracle::random_set(rng, 0, 40, 0.5));
      const auto b = affine(a, scales[pick(rng)], t - 100);
      CHECK(profile(a).dominance == profile(b).dominance);
    }
    const auto a1 = make(kA1);
    CHECK(profile(affine(a1, -1, 41)).dominance == Dominance::MSTD);
  }

  TEST_CASE("P_n is monotone in n") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const auto v = oracle::random_set(rng, 0, 50, 0.6);
      const auto a = make(v);
      const Int w = a.max() - a.min();
      bool seen = false;
      for (Int n = 0; n <= w; ++n) {
        const bool p = is_p(a, n);
        if (seen) CHECK(p);
        seen = seen || p;
        CHECK(is_sp(a, n) == oracle::sp(v, n));
        CHECK(is_dp(a, n) == oracle::dp(v, n));
      }
    }
  }

  TEST_CASE("SumDiffCounter and small_counts agree with the oracle") {
    std::mt19937_64 rng(8);
    SumDiffCounter counter;
    for (int t = 0; t < 300; ++t) {
      auto v = oracle::random_set(rng, 0, 63, 0.5);
      const Int lo = v.front();
      for (auto& x : v) x -= lo;
      const auto a = make(v);
      const auto c = oracle::counts(v);
      const auto r = counter.count(a.words(), a.span());
      CHECK(r.sums == c.sums);
      CHECK(r.diffs == c.diffs);
      std::uint64_t mask = 0;
      for (Int x : v) mask |= std::uint64_t{1} << x;
      const auto s = small_counts(mask << 0);
      CHECK(static_cast<std::size_t>(s.sum_count()) == c.sums);
      CHECK(static_cast<std::size_t>(s.diff_count()) == c.diffs);
      const Int w = v.back();
      for (Int n = 0; n <= w; n += 3) {
        CHECK(s.sp(static_cast<int>(n)) == oracle::sp(v, n));
        CHECK(s.dp(static_cast<int>(n)) == oracle::dp(v, n));
        CHECK(counter.sums_cover_inner(static_cast<std::size_t>(n)) == oracle::sp(v, n));
        CHECK(counter.diffs_cover_inner(static_cast<std::size_t>(n)) == oracle::dp(v, n));
      }
    }
  }

  TEST_CASE("check_partition reports overlap, gaps and non-MSTD parts") {
    const auto a1 = make(kA1), a2 = make(kA2);
    CHECK(check_partition({1, 40, {a1, a2}}).ok());
    const auto gap = check_partition({1, 41, {a1, a2}});
    CHECK_FALSE(gap.covers);
    const auto overlap = check_partition({1, 40, {a1, a2.unite(IntSet::from_values({1}))}});
    CHECK_FALSE(overlap.disjoint);
    const auto interval = check_partition({1, 10, {IntSet::interval(1, 10)}});
    CHECK_FALSE(interval.all_mstd);
    CHECK(check_partition({1, 10, {IntSet::interval(1, 10)}}, false).ok());
  }

  TEST_CASE("parallel_for visits every index once and rethrows") {
    for (unsigned threads : {1U, 2U, 5U}) {
      std::vector<int> hits(1000, 0);
      parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, threads);
      CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      CHECK_THROWS_AS(parallel_for(
                          100, [](std::size_t i) { if (i == 37) throw Error("boom"); }, threads),
                      Error);
    }
    set_thread_count(3);
    CHECK(thread_count() == 3);
    set_thread_count(0);
    CHECK(thread_count() >= 1);
  }
}
