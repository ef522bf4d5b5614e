#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mstd/int_set.hpp"
#include "mstd/partition.hpp"

namespace mstd::families {

// Spohn families

/// The four gap-notation families (a|1,1,2,1,4 x m,...).
enum class SpohnVariant { A1, A2, A3, A4 };

std::string_view to_string(SpohnVariant v);
SpohnVariant parse_spohn_variant(std::string_view name);

/// A1 = (1|1,1,2,1,4^m,3,1,1,2)    max 4m+13
/// A2 = (1|1,1,2,1,4^m,3,1,1,2,1)  max 4m+14
/// A3 = (1|1,1,2,1,4^m,3,1,1)      max 4m+11
/// A4 = (2|1,1,2,1,4^m,3,1,1)      max 4m+12
IntSet spohn_family(SpohnVariant v, Int m);

struct ComplementAps {
  IntSet step4;
  IntSet step2;
};

/// [1, max] minus the family member, split into a step-4 and a step-2 progression.
ComplementAps family_complement_aps(SpohnVariant v, Int m);

// Base expansion and strong sets

/// Smallest base for which digitwise sums and differences of A (shifted to min 0) never carry.
Int carry_free_base(const IntSet& a);

/// {sum_i a_i m^i : a_i in A - min A, i < k}. Throws if m < carry_free_base(A).
IntSet base_expand(const IntSet& a, int k, Int m);

/// |A+A| - |A-A| >= 10|A|.
bool is_ten_strong(const IntSet& a);

enum class Side { Above, Below };

/// S plus up to four extras, all above max S or all below min S. S must be 10-strong;
/// the union is checked to be MSTD before it is returned.
IntSet augment_strong(const IntSet& s, const IntSet& extras, Side side);

/// Source of the 10-strong set embedded twice by three_decompose.
struct StrongProvider {
  std::string name;
  IntSet set;  ///< normalized to min 0

  Int t() const { return set.max(); }
};

/// base_expand({0,2,3,4,7,11,12,14}, 4, 29).
const StrongProvider& default_strong_provider();
/// Wraps a caller-supplied set; throws unless it is 10-strong.
StrongProvider make_strong_provider(std::string name, const IntSet& set);

// Decompositions

/// Fringes {1,3,4,8,9,10,11} and {r-10,...,r}, the even core K, and two copies of the
/// provider set in the odd numbers of [12, r-11]. Requires r >= 4T + 24.
Partition three_decompose(Int r, const StrongProvider& provider = default_strong_provider());

/// Partition of [1, len] into two verified MSTD sets (len >= 20). Uses the explicit
/// construction for len >= 103, a randomized middle between the reference fringes for
/// 40 <= len < 103 and local search below that. Deterministic for a fixed seed.
Partition two_decompose_interval(Int len, std::uint64_t seed = 0);

/// Partition of [1, r] into k verified MSTD sets. Even k splits [1, r] into k/2
/// progressions; odd k >= 5 peels a Spohn set chosen by r mod 4 and splits the two
/// complementary progressions; k = 3 uses three_decompose. Throws with the relevant
/// threshold when r is too small.
Partition k_decompose(int k, Int r, const StrongProvider& provider = default_strong_provider());

struct RkBounds {
  Int lower = 0;
  Int upper = 0;
  std::vector<std::string> notes;
};

/// (8k, 10k) for even k, (8k, 20k-14) for odd k >= 5, (24, 4T+24) for k = 3.
RkBounds rk_bounds(int k, const StrongProvider& provider = default_strong_provider());

}  // namespace mstd::families
