#include "mstd/scenarios.hpp"

#include <algorithm>
#include <sstream>

#include "mstd/families.hpp"
#include "mstd/fringe.hpp"
#include "mstd/literals.hpp"
#include "mstd/probability.hpp"
#include "mstd/search.hpp"
#include "mstd/set_ops.hpp"

namespace mstd::scenarios {

namespace {

void expect(Report& r, std::string label, const std::string& expected, const std::string& actual) {
  r.checks.push_back({std::move(label), expected, actual, expected == actual});
}

template <class T>
void expect(Report& r, std::string label, const T& expected, const T& actual) {
  r.checks.push_back({std::move(label), std::to_string(expected), std::to_string(actual), expected == actual});
}

void expect_true(Report& r, std::string label, bool value) { expect(r, std::move(label), "true", value ? "true" : "false"); }

IntSet join(std::initializer_list<IntSet> parts) { return set_union(std::vector<IntSet>(parts)); }
IntSet vals(std::initializer_list<Int> v) { return IntSet::from_values(v); }
IntSet step2(Int a, Int b) { return IntSet::interval(a, b, 2); }

std::string counts(const IntSet& a) {
  const auto p = profile(a);
  return std::to_string(p.sum_count) + "/" + std::to_string(p.diff_count);
}

IntSet printed_a1e() {
  return join({vals({1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20}), vals({24}), step2(25, 45), vals({46}),
               vals({50, 51, 72, 73}), vals({77}), step2(78, 98), vals({99}),
               vals({103, 108, 109, 110, 113, 115, 119, 120, 121, 122})});
}

IntSet printed_a2e() {
  return join({vals({5, 6, 7, 10, 12, 16, 17, 18, 19}), IntSet::interval(21, 23), step2(26, 44), IntSet::interval(47, 49),
               vals({52, 53, 54, 69, 70, 71}), IntSet::interval(74, 76), step2(79, 97), IntSet::interval(100, 102),
               vals({104, 105, 106, 107, 111, 112, 114, 116, 117, 118})});
}

std::string partition_status(const Partition& p) {
  const auto c = check_partition(p);
  return c.ok() ? "valid" : c.issues.front();
}

std::vector<probability::FringePair> corollary_pairs() {
  return {{vals({0, 1, 2, 3, 7, 8, 10, 12, 13, 14, 19}), vals({20, 25, 26, 27, 30, 32, 36, 37, 38, 39})},
          {vals({4, 5, 6, 9, 11, 15, 16, 17, 18}), vals({21, 22, 23, 24, 28, 29, 31, 33, 34, 35})}};
}

Report remark12() {
  Report r{"remark12", {}, {}};
  const auto base = fringe::reference_pair();
  const IntSet d_hole = vals({-21, 21});
  expect_true(r, "A1+A1 = [2,80]", sumset(base.a1) == IntSet::interval(2, 80));
  expect_true(r, "A1-A1 = [-39,39] minus {-21,21}", diffset(base.a1) == *IntSet::interval(-39, 39).minus(d_hole));
  expect_true(r, "A2+A2 = [10,72]", sumset(base.a2) == IntSet::interval(10, 72));
  expect_true(r, "A2-A2 = [-31,31] minus {-21,21}", diffset(base.a2) == *IntSet::interval(-31, 31).minus(d_hole));
  expect(r, "|A1+A1|/|A1-A1|", std::string("79/77"), counts(base.a1));
  expect(r, "|A2+A2|/|A2-A2|", std::string("63/61"), counts(base.a2));
  expect_true(r, "A1 is P_20", is_p(base.a1, 20));
  expect_true(r, "A2 is P_16", is_p(base.a2, 16));
  expect_true(r, "validate_base_pair (full hypotheses)", fringe::validate_base_pair(base.a1, base.a2, 20).ok());
  return r;
}

Report appendix_d1() {
  Report r{"appendixD1", {}, {}};
  const IntSet a1 = printed_a1e(), a2 = printed_a2e();
  expect(r, "printed A'1e sums/diffs", std::string("243/241"), counts(a1));
  expect(r, "printed A'2e sums/diffs", std::string("227/225"), counts(a2));
  expect_true(r, "printed sets are disjoint", a1.disjoint_from(a2));
  const auto missed = IntSet::interval(1, 122).minus(a1.unite(a2));
  const std::string gap = missed ? "[" + std::to_string(missed->min()) + "," + std::to_string(missed->max()) + "] (" +
                                       std::to_string(missed->size()) + " elements)"
                                 : "none";
  expect(r, "erratum: printed pair misses from [1,122]", std::string("[55,68] (14 elements)"), gap);
  const bool contiguous = missed && missed->size() == missed->span();
  expect_true(r, "missed block is contiguous", contiguous);
  r.notes.push_back("the printed example omits the middle of the region; the construction below fills it");

  const auto own = fringe::two_decompose(fringe::reference_pair(), 12, 30);
  expect(r, "two_decompose(reference, k=12, m=30) on [1,122]", std::string("valid"), partition_status(own));
  expect(r, "own part 1 sums/diffs", std::string("243/241"), counts(own.parts[0]));
  expect(r, "own part 2 sums/diffs", std::string("227/225"), counts(own.parts[1]));
  // Where the canonical middle split differs from the printed one.
  const auto moved1 = a1.intersect(own.parts[1]);
  const auto moved2 = a2.intersect(own.parts[0]);
  r.notes.push_back("printed elements placed in the other part here: " + (moved1 ? to_string(*moved1) : "{}") +
                    " from A'1e, " + (moved2 ? to_string(*moved2) : "{}") + " from A'2e");
  return r;
}

Report appendix_d2() {
  Report r{"appendixD2", {}, {}};
  const auto p = families::k_decompose(5, 489);
  expect(r, "5-decomposition of [1,489]", std::string("valid"), partition_status(p));
  const IntSet m1 = join({vals({1, 2, 3, 5}), IntSet::interval(6, 482, 4), vals({485, 486, 487, 489})});
  expect_true(r, "M1 = {1,2,3,5} + [6,482]_4 + {485,486,487,489}", p.parts[0] == m1);
  const auto aps = families::family_complement_aps(families::SpohnVariant::A1, 119);
  expect_true(r, "[1,489] minus M1 = [4,488]_4 + [7,483]_2",
              aps.step4 == IntSet::interval(4, 488, 4) && aps.step2 == IntSet::interval(7, 483, 2));
  const auto d122 = fringe::two_decompose(fringe::reference_pair(), 12, 30);
  const auto d239 = fringe::two_decompose(fringe::reference_pair(), 12, 147);
  expect_true(r, "M2 = 4 A'1e", p.parts[1] == affine(d122.parts[0], 4, 0));
  expect_true(r, "M3 = 4 A'2e", p.parts[2] == affine(d122.parts[1], 4, 0));
  expect_true(r, "M4 = 2 A''1e + 5 (m = 147)", p.parts[3] == affine(d239.parts[0], 2, 5));
  expect_true(r, "M5 = 2 A''2e + 5", p.parts[4] == affine(d239.parts[1], 2, 5));
  expect_true(r, "A''1e contains 1", d239.parts[0].contains(1));
  return r;
}

Report fringe48() {
  Report r{"fringe48", {}, {}};
  const auto numbered = search::enumerate_fringe_pairs(20);
  expect(r, "pairs satisfying the numbered conditions", std::size_t{48}, numbered.size());
  const auto ref = fringe::reference_pair();
  expect_true(r, "reference pair is among them",
              std::any_of(numbered.begin(), numbered.end(), [&](const auto& b) { return b.a1 == ref.a1; }));
  search::FringeSearchOptions full;
  full.conditions = fringe::PairConditions::Full;
  const auto strict = search::enumerate_fringe_pairs(20, full);
  const auto without_p = std::count_if(numbered.begin(), numbered.end(), [](const auto& b) { return !b.p_property; });
  r.notes.push_back("with A1 P_20 and A2 P_16 also required: " + std::to_string(strict.size()) + " pairs; " +
                    std::to_string(without_p) + " of the 48 lack the P property");
  return r;
}

Report baseexp() {
  Report r{"baseexp", {}, {}};
  const IntSet seed = vals({0, 2, 3, 4, 7, 11, 12, 14});
  const IntSet s = families::base_expand(seed, 4, 29);
  const auto p = profile(s);
  expect(r, "|S|", std::size_t{4096}, s.size());
  expect(r, "|S+S|", std::size_t{456976}, p.sum_count);
  expect(r, "|S-S|", std::size_t{390625}, p.diff_count);
  expect_true(r, "S is 10-strong", families::is_ten_strong(s));
  expect(r, "T = max S", Int{353640}, s.max());
  return r;
}

Report bounds() {
  Report r{"bounds", {}, {}};
  auto pair = [](const families::RkBounds& b) { return "(" + std::to_string(b.lower) + "," + std::to_string(b.upper) + ")"; };
  expect(r, "rk_bounds(2)", std::string("(16,20)"), pair(families::rk_bounds(2)));
  expect(r, "rk_bounds(5)", std::string("(40,86)"), pair(families::rk_bounds(5)));
  const Int t = families::default_strong_provider().t();
  expect(r, "rk_bounds(3)", "(24," + std::to_string(4 * t + 24) + ")", pair(families::rk_bounds(3)));
  for (int k : {2, 4, 5, 6, 7, 9}) {
    const Int up = families::rk_bounds(k).upper;
    std::string status = "valid";
    for (Int rr : {up, up + 1, up + 17}) {
      try {
        const auto s = partition_status(families::k_decompose(k, rr));
        if (s != "valid") status = "r=" + std::to_string(rr) + ": " + s;
      } catch (const Error& e) {
        status = "r=" + std::to_string(rr) + ": " + e.what();
      }
    }
    expect(r, "k_decompose(" + std::to_string(k) + ", upper, upper+1, upper+17)", std::string("valid"), status);
  }
  const auto table = search::feasibility_table(2, 14, 22);
  const Int first = table.first_feasible.value_or(-1);
  expect_true(r, "first feasible r for k=2 lies in [16,20] (found " + std::to_string(first) + ")", first >= 16 && first <= 20);
  for (const auto& note : families::rk_bounds(7).notes) r.notes.push_back("k=7: " + note);
  return r;
}

Report corollary_b5() {
  Report r{"corollaryB5", {}, {}};
  const auto pairs = corollary_pairs();
  const auto sc = probability::sufficient_condition(pairs, 20);
  expect_true(r, "hypotheses hold", sc.violations.empty());
  if (sc.reports.size() == 2) {
    expect(r, "a1", Int{12}, sc.reports[0].a);
    expect(r, "a2", Int{4}, sc.reports[1].a);
    expect(r, "tau(L1),tau(R1),tau(L2),tau(R2)", std::string("6,6,8,9"),
           std::to_string(sc.reports[0].tau_l) + "," + std::to_string(sc.reports[0].tau_r) + "," +
               std::to_string(sc.reports[1].tau_l) + "," + std::to_string(sc.reports[1].tau_r));
    expect_true(r, "f(L1,R1) < 0.33 (" + sc.reports[0].f.str() + ")", sc.reports[0].f < probability::Rational(33, 100));
    expect_true(r, "f(L2,R2) < 0.03 (" + sc.reports[1].f.str() + ")", sc.reports[1].f < probability::Rational(3, 100));
  }
  expect_true(r, "sum f < 1 (" + sc.sum_f.str() + ")", sc.pass);
  const auto est = probability::monte_carlo_proportion(pairs, 20, 100, 100000, 20240601);
  const double floor = 1 - sc.sum_f.convert_to<double>() - 0.05;
  std::ostringstream os;
  os << est.proportion << " [" << est.ci_low << ", " << est.ci_high << "]";
  expect_true(r, "Monte Carlo m=100, 1e5 trials >= 1 - sum f - 0.05 (" + os.str() + ")", est.proportion >= floor);
  return r;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"remark12", "appendixD1", "appendixD2", "fringe48",
                                            "baseexp",  "bounds",     "corollaryB5"};
  return all;
}

Report run(std::string_view name) {
  if (name == "remark12") return remark12();
  if (name == "appendixD1") return appendix_d1();
  if (name == "appendixD2") return appendix_d2();
  if (name == "fringe48") return fringe48();
  if (name == "baseexp") return baseexp();
  if (name == "bounds") return bounds();
  if (name == "corollaryB5") return corollary_b5();
  throw Error("unknown scenario: " + std::string(name));
}

}  // namespace mstd::scenarios
