#include <doctest.h>

#include "mstd/fringe.hpp"
#include "mstd/search.hpp"
#include "mstd/set_ops.hpp"
#include "oracle.hpp"

using namespace mstd;
using namespace mstd::search;

namespace {

struct SlowCount {
  std::size_t numbered = 0;
  std::size_t full = 0;
};

// Independent enumeration: left and right free elements chosen separately,
// membership tested with the pairwise oracle.
SlowCount slow_fringe_count(Int n) {
  std::vector<Int> forced1, forced2, free_left, free_right;
  for (Int x = 1; x <= 2 * n; ++x) {
    const bool f1 = x <= 4 || x == n || x == n + 1 || x >= 2 * n - 3;
    const bool f2 = (x >= 5 && x <= 7) || (x >= 2 * n - 6 && x <= 2 * n - 4);
    if (f1)
      forced1.push_back(x);
    else if (f2)
      forced2.push_back(x);
    else
      (x <= n ? free_left : free_right).push_back(x);
  }
  SlowCount out;
  const std::uint64_t nl = std::uint64_t{1} << free_left.size(), nr = std::uint64_t{1} << free_right.size();
  for (std::uint64_t ml = 0; ml < nl; ++ml)
    for (std::uint64_t mr = 0; mr < nr; ++mr) {
      oracle::Values a1 = forced1, a2 = forced2;
      for (std::size_t i = 0; i < free_left.size(); ++i) ((ml >> i) & 1 ? a1 : a2).push_back(free_left[i]);
      for (std::size_t i = 0; i < free_right.size(); ++i) ((mr >> i) & 1 ? a1 : a2).push_back(free_right[i]);
      std::sort(a1.begin(), a1.end());
      std::sort(a2.begin(), a2.end());
      if (!oracle::mstd(a1) || !oracle::mstd(a2)) continue;
      ++out.numbered;
      if (oracle::sp(a1, n) && oracle::dp(a1, n) && oracle::sp(a2, n - 4) && oracle::dp(a2, n - 4)) ++out.full;
    }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("fringe pairs for n = 20") {
    const auto numbered = enumerate_fringe_pairs(20);
    CHECK(numbered.size() == 48);
    FringeSearchOptions full;
    full.conditions = fringe::PairConditions::Full;
    const auto strict = enumerate_fringe_pairs(20, full);
    CHECK(strict.size() == 46);
    CHECK(std::count_if(numbered.begin(), numbered.end(), [](const auto& b) { return b.p_property; }) == 46);

    const auto ref = fringe::reference_pair();
    CHECK(std::any_of(numbered.begin(), numbered.end(), [&](const auto& b) { return b.a1 == ref.a1; }));
    for (const auto& b : numbered) {
      CHECK(oracle::mstd(b.a1.values()));
      CHECK(oracle::mstd(b.a2.values()));
      CHECK(b.a1.unite(b.a2) == IntSet::interval(1, 40));
      CHECK(b.a1.disjoint_from(b.a2));
    }
    for (std::size_t i = 1; i < numbered.size(); ++i) CHECK_FALSE(numbered[i].a1 == numbered[i - 1].a1);
  }

  TEST_CASE("fringe enumeration does not depend on thread count") {
    FringeSearchOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = enumerate_fringe_pairs(18, one);
    const auto b = enumerate_fringe_pairs(18, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].a1 == b[i].a1);
  }

  TEST_CASE("fringe counts match an independent slow enumeration") {
    for (Int n : {14, 16}) {
      CAPTURE(n);
      const auto slow = slow_fringe_count(n);
      CHECK(enumerate_fringe_pairs(n).size() == slow.numbered);
      FringeSearchOptions full;
      full.conditions = fringe::PairConditions::Full;
      CHECK(enumerate_fringe_pairs(n, full).size() == slow.full);
    }
  }

  TEST_CASE("fringe enumeration limits") {
    CHECK_THROWS_AS(enumerate_fringe_pairs(9), Error);
    CHECK_THROWS_AS(enumerate_fringe_pairs(32), Error);
    FringeSearchOptions tiny;
    tiny.max_candidates = 1000;
    CHECK_THROWS_AS(enumerate_fringe_pairs(20, tiny), Error);
  }

  TEST_CASE("exhaustive k-decomposition") {
    const auto yes = exists_k_decomposition(20, 2);
    REQUIRE(yes.verdict == Verdict::Yes);
    REQUIRE(yes.witness);
    CHECK(check_partition(*yes.witness).ok());
    for (const auto& part : yes.witness->parts) CHECK(oracle::mstd(part.values()));

    CHECK(exists_k_decomposition(15, 2).verdict == Verdict::No);
    CHECK(exists_k_decomposition(12, 1).verdict == Verdict::No);
    CHECK(exists_k_decomposition(20, 2, 5).verdict == Verdict::Unknown);
    CHECK(to_string(Verdict::Unknown) == "unknown");
  }

  TEST_CASE("feasibility table") {
    const auto a = feasibility_table(2, 8, 13);
    for (const auto& row : a.rows) CHECK(row.verdict == Verdict::No);
    CHECK_FALSE(a.first_feasible);
    const auto b = feasibility_table(2, 8, 13, std::uint64_t{1} << 34, 1);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].verdict == b.rows[i].verdict);
  }

  TEST_CASE("minimal MSTD cardinality") {
    const auto m = min_mstd_cardinality(14);
    REQUIRE(m.size);
    CHECK(*m.size == 8);
    REQUIRE(m.witness);
    CHECK(m.witness->size() == 8);
    CHECK(oracle::mstd(m.witness->values()));
    CHECK(m.witness->max() <= 14);
    CHECK_FALSE(min_mstd_cardinality(7).size);
    CHECK_THROWS_AS(min_mstd_cardinality(41), Error);
  }

  TEST_CASE("local search") {
    const auto p = local_search_decomposition(30, 2, 3);
    REQUIRE(p);
    CHECK(check_partition(*p).ok());
    for (const auto& part : p->parts) CHECK(oracle::mstd(part.values()));
    const auto q = local_search_decomposition(30, 2, 3);
    REQUIRE(q);
    CHECK(p->parts[0] == q->parts[0]);
    CHECK_FALSE(local_search_decomposition(12, 2, 1, 2000));
  }
}
