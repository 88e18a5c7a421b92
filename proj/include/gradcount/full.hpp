#pragma once

// Counts of all (not necessarily elementary) gradings by a finite abelian
// group over an algebraically closed field of characteristic zero:
// N(G, m) = sum over k | m_i of sum over T in T(G,k) of D(T,k) E(G/T, m/k).
// E on the quotient is computed from the quotient's order profile alone; no
// isomorphism classification of G/T is required.

#include <cstdint>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/division.hpp"
#include "gradcount/elementary.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"
#include "gradcount/subgroup.hpp"

namespace gradcount {

namespace detail {

// Partial census sum restricted to k in [k_min, inf).
inline Int count_all_from(const AbelianGroupType& g, const BlockShape& shape, std::uint64_t k_min,
                          std::uint64_t subgroup_bound, std::uint64_t bicharacter_bound) {
  auto subs = enumerate_subgroups(g, subgroup_bound);
  Int total = 0;
  for (std::uint64_t k : divisors_of(shape.gcd())) {
    if (k < k_min) continue;
    Int k2 = Int(k) * Int(k);
    if (k2 > g.order()) continue;
    for (const auto& t : subs) {
      if (Int(t.elements.size()) != k2 || !is_square_type(t.iso_type)) continue;
      Int d = division_count_of_type(t.iso_type, bicharacter_bound);
      if (d == 0) continue;
      auto [qtype, qprofile] = quotient_profile(g, t);
      total += d * count_elementary(qprofile, shape.divided(k));
    }
  }
  return total;
}

}  // namespace detail

inline Int count_all(const AbelianGroupType& g, const BlockShape& shape,
                     std::uint64_t subgroup_bound = kDefaultSubgroupBound,
                     std::uint64_t bicharacter_bound = kDefaultBicharacterBound) {
  return detail::count_all_from(g, shape, 1, subgroup_bound, bicharacter_bound);
}

inline Int count_all_matrix(const AbelianGroupType& g, std::uint64_t m,
                            std::uint64_t subgroup_bound = kDefaultSubgroupBound,
                            std::uint64_t bicharacter_bound = kDefaultBicharacterBound) {
  return count_all(g, BlockShape{m}, subgroup_bound, bicharacter_bound);
}

struct SandwichReport {
  Int elementary;       // E(G, m)
  Int all;              // N(G, m)
  Int correction;       // N - E
  bool bounds_hold;     // E <= N
  bool correction_matches;  // N - E equals the k > 1 partial census sum
  Rat ratio;            // N / E, exact
};

// Checks E(G,m) <= N(G,m), that the excess equals the k > 1 part of the
// census, and reports the exact ratio N/E.
inline SandwichReport sandwich_check(const AbelianGroupType& g, std::uint64_t m,
                                     std::uint64_t subgroup_bound = kDefaultSubgroupBound,
                                     std::uint64_t bicharacter_bound = kDefaultBicharacterBound) {
  SandwichReport r{Int(0), Int(0), Int(0), false, false, Rat(0)};
  r.elementary = count_elementary_matrix(GroupSpec(g), m);
  r.all = count_all_matrix(g, m, subgroup_bound, bicharacter_bound);
  r.correction = r.all - r.elementary;
  r.bounds_hold = r.elementary <= r.all;
  Int tail = detail::count_all_from(g, BlockShape{m}, 2, subgroup_bound, bicharacter_bound);
  r.correction_matches = (r.correction == tail);
  r.ratio = Rat(r.all, r.elementary);
  return r;
}

}  // namespace gradcount
