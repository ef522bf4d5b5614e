#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mstd/int_set.hpp"

namespace mstd::probability {

using Rational = boost::multiprecision::cpp_rational;

/// 0-based fringe pair: L in [0, n-1], R in [n, 2n-1].
struct FringePair {
  IntSet l;
  IntSet r;
};

/// Shifts a 1-based set on [1, 2n] down to [0, 2n-1] and splits it at n.
FringePair from_one_based(const IntSet& a, Int n);

struct FringeReport {
  Int n = 0;
  Int a = 0;
  Int tau_l = 0;
  Int tau_r = 0;
  Int size_l = 0;
  Int size_r = 0;
  Rational f;  ///< (a-2)(2^-tau_R + 2^-tau_L) + 6(2^-|L| + 2^-|R|)

  double f_double() const { return f.convert_to<double>(); }
};

/// Smallest a >= 2 with [n, 2n-a] in L+L and [2n+a-2, 3n-2] in R+R.
Int compute_a(const IntSet& l, const IntSet& r, Int n);

/// (|{i in L : i <= n-a+1}|, |{i in R : i >= n+a-2}|).
std::pair<Int, Int> compute_tau(const IntSet& l, const IntSet& r, Int n, Int a);

FringeReport f_value(const IntSet& l, const IntSet& r, Int n);

struct SufficientCondition {
  std::vector<FringeReport> reports;
  Rational sum_f;
  std::vector<std::string> violations;  ///< unmet hypotheses on the pairs
  bool pass = false;                    ///< no violations and sum_f < 1
};

/// Checks the pairs partition [0, 2n-1] into MSTD P_n sets, then sums f.
SufficientCondition sufficient_condition(const std::vector<FringePair>& pairs, Int n);

struct Estimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double proportion = 0;
  double ci_low = 0;   ///< Wilson 95% interval
  double ci_high = 0;
  double std_error = 0;
};

/// Wilson score interval at 95% for `successes` out of `trials`.
Estimate wilson(std::uint64_t successes, std::uint64_t trials);

/// Assigns each of [n, n+m-1] uniformly to one of the k middles and records whether
/// every L_i + M_i + (R_i + m) is MSTD. Trial t draws from a generator seeded by
/// (seed, t), so the estimate does not depend on the thread count.
Estimate monte_carlo_proportion(const std::vector<FringePair>& pairs, Int n, Int m, std::uint64_t trials,
                                std::uint64_t seed, unsigned threads = 0);

}  // namespace mstd::probability
