#include "mstd/families.hpp"

#include <algorithm>
#include <random>

#include "mstd/fringe.hpp"
#include "mstd/literals.hpp"
#include "mstd/search.hpp"
#include "mstd/set_ops.hpp"

namespace mstd::families {

namespace {

std::string num(Int x) { return std::to_string(x); }

Partition verified(Partition p, const char* what) {
  const auto check = check_partition(p);
  if (!check.ok()) throw Error(std::string(what) + ": output failed verification: " + check.issues.front());
  return p;
}

// An arithmetic progression first, first + step, ..., with `len` terms.
struct Progression {
  Int first = 0, step = 1, len = 0;
};

Progression as_progression(const IntSet& s) {
  const auto v = s.values();
  const Int step = v.size() > 1 ? v[1] - v[0] : 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] != step) throw Error("set is not an arithmetic progression");
  return {v.front(), step, static_cast<Int>(v.size())};
}

// Maps a partition of [1, len] onto the progression.
void embed(const Partition& p, const Progression& ap, std::vector<IntSet>& out) {
  for (const auto& part : p.parts) out.push_back(affine(part, ap.step, ap.first - ap.step));
}

// Splits the progression into q interleaved sub-progressions.
std::vector<Progression> residue_split(const Progression& ap, Int q) {
  std::vector<Progression> out;
  for (Int j = 0; j < q; ++j) out.push_back({ap.first + j * ap.step, ap.step * q, (ap.len - j + q - 1) / q});
  return out;
}

void two_decompose_progressions(const Progression& ap, Int q, std::vector<IntSet>& out) {
  for (const auto& sub : residue_split(ap, q)) embed(two_decompose_interval(sub.len, 0), sub, out);
}

}  // namespace

// Spohn families

std::string_view to_string(SpohnVariant v) {
  switch (v) {
    case SpohnVariant::A1: return "A1";
    case SpohnVariant::A2: return "A2";
    case SpohnVariant::A3: return "A3";
    case SpohnVariant::A4: return "A4";
  }
  return "A1";
}

SpohnVariant parse_spohn_variant(std::string_view name) {
  if (name == "A1") return SpohnVariant::A1;
  if (name == "A2") return SpohnVariant::A2;
  if (name == "A3") return SpohnVariant::A3;
  if (name == "A4") return SpohnVariant::A4;
  throw Error("unknown Spohn variant: " + std::string(name) + " (expected A1..A4)");
}

IntSet spohn_family(SpohnVariant v, Int m) {
  if (m < 1) throw Error("spohn_family: m must be at least 1");
  GapNotation g{v == SpohnVariant::A4 ? 2 : 1, {1, 1, 2, 1}};
  g.gaps.insert(g.gaps.end(), static_cast<std::size_t>(m), 4);
  g.gaps.insert(g.gaps.end(), {3, 1, 1});
  if (v == SpohnVariant::A1 || v == SpohnVariant::A2) g.gaps.push_back(2);
  if (v == SpohnVariant::A2) g.gaps.push_back(1);
  return from_gaps(g);
}

ComplementAps family_complement_aps(SpohnVariant v, Int m) {
  const IntSet s = spohn_family(v, m);
  const IntSet rest = *IntSet::interval(1, s.max()).minus(s);
  const auto values = rest.values();
  for (Int residue = 0; residue < 4; ++residue) {
    std::vector<Int> p4, p2;
    for (Int x : values) (x % 4 == residue ? p4 : p2).push_back(x);
    if (p4.empty() || p2.empty()) continue;
    try {
      const auto a = as_progression(IntSet::from_values(p4));
      const auto b = as_progression(IntSet::from_values(p2));
      if ((a.len > 1 && a.step != 4) || (b.len > 1 && b.step != 2)) continue;
      return {IntSet::from_values(p4), IntSet::from_values(p2)};
    } catch (const Error&) {
    }
  }
  throw Error("family_complement_aps: complement is not a union of step-4 and step-2 progressions");
}

// Base expansion

Int carry_free_base(const IntSet& a) { return 2 * (a.max() - a.min()) + 1; }

IntSet base_expand(const IntSet& a, int k, Int m) {
  if (k < 1) throw Error("base_expand: k must be at least 1");
  if (m < carry_free_base(a))
    throw Error("base_expand: base " + num(m) + " is below the carry-free threshold " + num(carry_free_base(a)));
  const Int width = a.max() - a.min();
  // Largest element is width * (1 + m + ... + m^(k-1)); keep it well inside the bitset budget.
  __int128 top = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    top += width * power;
    power *= m;
    if (top > (__int128{1} << 32)) throw Error("base_expand: result span exceeds 2^32");
  }
  __int128 count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<__int128>(a.size());
  if (count > (__int128{1} << 26)) throw Error("base_expand: result would hold more than 2^26 elements");

  const auto digits = a.translate(-a.min()).values();
  std::vector<Int> cur{0};
  Int scale = 1;
  for (int i = 0; i < k; ++i) {
    std::vector<Int> next;
    next.reserve(cur.size() * digits.size());
    for (Int d : digits)
      for (Int c : cur) next.push_back(c + d * scale);
    cur.swap(next);
    scale *= m;
  }
  return IntSet::from_values(cur);
}

bool is_ten_strong(const IntSet& a) {
  return profile(a).surplus() >= 10 * static_cast<long long>(a.size());
}

IntSet augment_strong(const IntSet& s, const IntSet& extras, Side side) {
  if (extras.size() > 4) throw Error("augment_strong: at most four extra elements are allowed");
  if (side == Side::Above && extras.min() <= s.max()) throw Error("augment_strong: extras must lie above max S");
  if (side == Side::Below && extras.max() >= s.min()) throw Error("augment_strong: extras must lie below min S");
  if (!is_ten_strong(s)) throw Error("augment_strong: S is not 10-strong");
  IntSet out = s.unite(extras);
  if (!is_mstd(out)) throw Error("augment_strong: union is not MSTD");
  return out;
}

const StrongProvider& default_strong_provider() {
  static const StrongProvider provider{"base_expand({0,2,3,4,7,11,12,14}, 4, 29)",
                                       base_expand(IntSet::from_values({0, 2, 3, 4, 7, 11, 12, 14}), 4, 29)};
  return provider;
}

StrongProvider make_strong_provider(std::string name, const IntSet& set) {
  if (!is_ten_strong(set)) throw Error("strong provider: set is not 10-strong");
  return {std::move(name), set.translate(-set.min())};
}

// Decompositions

Partition three_decompose(Int r, const StrongProvider& provider) {
  const Int t = provider.t();
  if (r < 4 * t + 24) throw Error("three_decompose: r = " + num(r) + " is below 4T+24 = " + num(4 * t + 24));

  // The second copy is the first shifted by the smallest positive non-difference,
  // so the two interleave instead of needing 2T+2 odd slots side by side.
  const IntSet diffs = diffset(provider.set);
  Int d = 1;
  while (diffs.contains(d)) ++d;
  const IntSet s1 = affine(provider.set, 2, 13);
  const IntSet s2 = affine(provider.set, 2, 2 * d + 13);
  if (s2.max() > r - 12) throw Error("three_decompose: the two strong copies do not fit below r-11");
  if (!s1.disjoint_from(s2)) throw Error("three_decompose: strong copies intersect");

  const IntSet s1_star = augment_strong(s1, IntSet::from_values({2, 5, 6, 7}), Side::Below);
  const IntSet s2_star = augment_strong(s2, IntSet::from_values({r - 6, r - 4, r - 3}), Side::Above);
  const IntSet k_star = *IntSet::interval(1, r).minus(s1_star.unite(s2_star));
  return verified(Partition{1, r, {k_star, s1_star, s2_star}}, "three_decompose");
}

Partition two_decompose_interval(Int len, std::uint64_t seed) {
  if (len < 20) throw Error("two_decompose_interval: length " + num(len) + " is below 20");
  constexpr Int kFringeSpan = 40;
  constexpr Int kExplicitK = 12;
  constexpr Int kExplicitMin = 2 * 20 + 11 + 4 * kExplicitK + 4;

  if (len < kFringeSpan) {
    auto p = search::local_search_decomposition(len, 2, seed);
    if (!p) throw Error("two_decompose_interval: local search found no split of [1," + num(len) + "]");
    return verified(std::move(*p), "two_decompose_interval");
  }

  const fringe::BasePair base = fringe::reference_pair();
  if (len >= kExplicitMin) {
    const Int m = len - 2 * base.n - 4 * kExplicitK - 4;
    try {
      return fringe::two_decompose(base, kExplicitK, m);
    } catch (const Error&) {
      return fringe::two_decompose(base, kExplicitK, m, fringe::MiddleStrategy::SeededRandom, seed);
    }
  }

  // Random middle between the reference fringes: L_i + M_i + (R_i + m).
  const Int m = len - kFringeSpan;
  const IntSet r1 = base.r1.translate(m), r2 = base.r2.translate(m);
  if (m == 0) return verified(Partition{1, len, {base.a1, base.a2}}, "two_decompose_interval");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Int> v1(base.l1.values()), v2(base.l2.values());
    for (Int x = base.n + 1; x <= base.n + m; ++x) ((rng() >> 63) ? v1 : v2).push_back(x);
    const IntSet a = IntSet::from_values(v1).unite(r1);
    const IntSet b = IntSet::from_values(v2).unite(r2);
    if (is_mstd(a) && is_mstd(b)) return verified(Partition{1, len, {a, b}}, "two_decompose_interval");
  }
  throw Error("two_decompose_interval: no random middle worked for length " + num(len));
}

Partition k_decompose(int k, Int r, const StrongProvider& provider) {
  if (k < 2) throw Error("k_decompose: k must be at least 2");
  if (r < 8 * static_cast<Int>(k))
    throw Error("k_decompose: r = " + num(r) + " is below the lower bound 8k = " + num(8 * k));
  if (k == 3) return three_decompose(r, provider);

  std::vector<IntSet> parts;
  if (k % 2 == 0) {
    const Int q = k / 2;
    if (r < 20 * q)
      throw Error("k_decompose: r = " + num(r) + " is below 10k = " + num(20 * q) +
                  " (each of the k/2 progressions needs length >= 20)");
    two_decompose_progressions({1, 1, r}, q, parts);
    return verified(Partition{1, r, std::move(parts)}, "k_decompose");
  }

  const SpohnVariant variant = r % 4 == 1   ? SpohnVariant::A1
                               : r % 4 == 2 ? SpohnVariant::A2
                               : r % 4 == 3 ? SpohnVariant::A3
                                            : SpohnVariant::A4;
  const Int offset = r % 4 == 1 ? 13 : r % 4 == 2 ? 14 : r % 4 == 3 ? 11 : 12;
  const Int m = (r - offset) / 4;
  const std::string too_small = "k_decompose: r = " + num(r) + " is too small for the Spohn split; every r >= 20k-14 = " +
                                num(20 * static_cast<Int>(k) - 14) + " works";
  if (m < 1) throw Error(too_small);

  const auto aps = family_complement_aps(variant, m);
  const Progression p4 = as_progression(aps.step4), p2 = as_progression(aps.step2);
  const Int pairs = (k - 1) / 2;
  // a progression pairs for the step-4 side, pairs - a for the step-2 side; keep the
  // shortest sub-progression as long as possible.
  Int best_a = 0, best_len = -1;
  for (Int a = 1; a < pairs; ++a) {
    const Int shortest = std::min(p4.len / a, p2.len / (pairs - a));
    if (shortest >= 20 && shortest > best_len) {
      best_a = a;
      best_len = shortest;
    }
  }
  if (best_a == 0) throw Error(too_small);

  parts.push_back(spohn_family(variant, m));
  two_decompose_progressions(p4, best_a, parts);
  two_decompose_progressions(p2, pairs - best_a, parts);
  return verified(Partition{1, r, std::move(parts)}, "k_decompose");
}

RkBounds rk_bounds(int k, const StrongProvider& provider) {
  if (k < 2) throw Error("rk_bounds: k must be at least 2");
  const Int kk = k;
  RkBounds b;
  if (k % 2 == 0) {
    b = {8 * kk, 10 * kk, {}};
  } else if (k >= 5) {
    b = {8 * kk, 20 * kk - 14, {}};
    if (k % 4 == 3)
      b.notes.push_back("the k = 4j+3 case split suggests 20k-54 = " + num(20 * kk - 54) +
                        ", which this construction does not reach (sub-progressions fall below length 20)");
  } else {
    const Int t = provider.t();
    b = {24, 4 * t + 24, {"T = " + num(t) + " from provider " + provider.name}};
  }
  return b;
}

}  // namespace mstd::families
