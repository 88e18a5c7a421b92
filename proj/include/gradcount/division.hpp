#pragma once

// Census of division gradings on M_k: square-type subgroups T with |T| = k^2
// and the brute-force count of nondegenerate alternating bicharacters on T.
// Bicharacter values are abstract roots of unity kept as exponents mod the
// exponent of T; no numeric complex arithmetic appears anywhere.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"
#include "gradcount/subgroup.hpp"

namespace gradcount {

inline constexpr std::uint64_t kDefaultBicharacterBound = 256;

// beta(g_i, g_j) = zeta_E^{c_ij} over chosen generators of orders d_1..d_r,
// E = Exp(T).  Well-definedness forces every c_ij to be a multiple of
// E/gcd(d_i, d_j); alternating means zero diagonal and c_ij + c_ji = 0 mod E.
struct Bicharacter {
  std::vector<std::uint64_t> generator_orders;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> entries;  // r*r, entries[i*r+j] = c_ij mod E

  std::uint64_t pairing_exponent(const std::vector<std::uint64_t>& t,
                                 const std::vector<std::uint64_t>& s) const {
    const std::size_t r = generator_orders.size();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (t[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (s[j] == 0) continue;
        acc = (acc + (t[i] % exponent) * ((entries[i * r + j] * (s[j] % exponent)) % exponent)) % exponent;
      }
    }
    return acc;
  }

  // beta(t, .) must be nontrivial for every nonidentity t; checked by full
  // evaluation over T x T.
  bool nondegenerate() const {
    const std::size_t r = generator_orders.size();
    std::vector<std::uint64_t> t(r, 0), s(r, 0);
    auto advance = [&](std::vector<std::uint64_t>& v) {
      for (std::size_t i = 0; i < r; ++i) {
        if (++v[i] < generator_orders[i]) return true;
        v[i] = 0;
      }
      return false;
    };
    // start from the first nonidentity tuple
    while (advance(t)) {
      bool found = false;
      std::fill(s.begin(), s.end(), 0);
      do {
        if (pairing_exponent(t, s) != 0) {
          found = true;
          break;
        }
      } while (advance(s));
      if (!found) return false;
    }
    return true;
  }
};

// T is of square type when every partition part occurs an even number of
// times per prime, i.e. T is isomorphic to H x H.
inline bool is_square_type(const AbelianGroupType& t) {
  for (const auto& c : t.components()) {
    std::size_t i = 0;
    while (i < c.parts.size()) {
      std::size_t j = i;
      while (j < c.parts.size() && c.parts[j] == c.parts[i]) ++j;
      if ((j - i) % 2 != 0) return false;
      i = j;
    }
  }
  return true;
}

// Counts the nondegenerate alternating bicharacters on T by enumerating all
// admissible exponent matrices.  Brute force is the definition here; no
// closed form is assumed.  Returns 0 whenever T is not of square type.
inline Int count_nondegenerate_alternating(const AbelianGroupType& t,
                                           std::uint64_t order_bound = kDefaultBicharacterBound) {
  if (t.order() > order_bound)
    throw domain_error("bicharacter enumeration limited to |T| <= " + std::to_string(order_bound) +
                       ", got " + t.order().str());
  std::vector<std::uint64_t> ds = t.cyclic_factor_orders();
  const std::size_t r = ds.size();
  std::uint64_t exponent = 1;
  for (std::uint64_t d : ds) exponent = std::lcm(exponent, d);

  Bicharacter b;
  b.generator_orders = ds;
  b.exponent = exponent;
  b.entries.assign(r * r, 0);

  struct Slot {
    std::size_t i, j;
    std::uint64_t step, choices;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      std::uint64_t g = std::gcd(ds[i], ds[j]);
      slots.push_back({i, j, exponent / g, g});
    }

  Int count = 0;
  std::vector<std::uint64_t> pick(slots.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < slots.size(); ++k) {
      std::uint64_t c = pick[k] * slots[k].step;
      b.entries[slots[k].i * r + slots[k].j] = c;
      b.entries[slots[k].j * r + slots[k].i] = (exponent - c) % exponent;
    }
    if (b.nondegenerate()) ++count;
    std::size_t k = 0;
    for (; k < slots.size(); ++k) {
      if (++pick[k] < slots[k].choices) break;
      pick[k] = 0;
    }
    if (k == slots.size()) break;
  }
  return count;
}

// Memoized by canonical isomorphism type; D(T, k) depends only on the type.
inline Int division_count_of_type(const AbelianGroupType& t,
                                  std::uint64_t order_bound = kDefaultBicharacterBound) {
  static std::map<AbelianGroupType, Int> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  Int v = count_nondegenerate_alternating(t, order_bound);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(t, std::move(v)).first->second;
}

// T(G, k): subgroups of order k^2 isomorphic to some H x H.
inline std::vector<SubgroupHandle> square_type_subgroups(
    const AbelianGroupType& g, std::uint64_t k,
    std::uint64_t subgroup_bound = kDefaultSubgroupBound) {
  if (k == 0) throw domain_error("k must be positive");
  Int k2 = Int(k) * Int(k);
  std::vector<SubgroupHandle> out;
  for (auto& h : enumerate_subgroups(g, subgroup_bound))
    if (Int(h.elements.size()) == k2 && is_square_type(h.iso_type)) out.push_back(std::move(h));
  return out;
}

// Pairs each T in T(G, k) with D(T, k).
inline std::vector<std::pair<SubgroupHandle, Int>> division_census(
    const AbelianGroupType& g, std::uint64_t k,
    std::uint64_t subgroup_bound = kDefaultSubgroupBound,
    std::uint64_t bicharacter_bound = kDefaultBicharacterBound) {
  std::vector<std::pair<SubgroupHandle, Int>> out;
  for (auto& h : square_type_subgroups(g, k, subgroup_bound)) {
    Int d = division_count_of_type(h.iso_type, bicharacter_bound);
    out.emplace_back(std::move(h), std::move(d));
  }
  return out;
}

}  // namespace gradcount
