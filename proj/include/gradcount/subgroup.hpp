#pragma once

// Subgroup enumeration for abelian groups at desk scale.  Subgroups of each
// primary component are found by closing generating sets one element at a
// time and deduplicating by element set; subgroups of the full group are the
// products of per-prime subgroups.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"

namespace gradcount {

inline constexpr std::uint64_t kDefaultSubgroupBound = 256;

struct SubgroupHandle {
  AbelianGroupType ambient;
  std::vector<std::uint64_t> elements;  // sorted mixed-radix encodings within ambient
  AbelianGroupType iso_type;

  friend auto operator<=>(const SubgroupHandle&, const SubgroupHandle&) = default;
};

inline OrderProfile element_set_profile(const AbelianElements& els,
                                        const std::vector<std::uint64_t>& elements) {
  OrderProfile prof;
  prof.order = Int(elements.size());
  for (std::uint64_t a : elements) prof.counts[els.element_order(a)] += 1;
  return prof;
}

// Recovers the isomorphism type of a subgroup from its order profile via the
// per-prime partition recovery (the same inversion that backs identification
// from count sequences).
inline AbelianGroupType iso_type_of_elements(const AbelianElements& els,
                                             const std::vector<std::uint64_t>& elements) {
  auto cls = classify_order_profile(element_set_profile(els, elements));
  if (auto* t = std::get_if<AbelianGroupType>(&cls)) return *t;
  throw std::logic_error("subgroup of an abelian group failed profile classification: " +
                         std::get<NonAbelianCertificate>(cls).reason);
}

inline AbelianGroupType iso_type_of_subgroup(const SubgroupHandle& h) {
  AbelianElements els(h.ambient);
  return iso_type_of_elements(els, h.elements);
}

namespace detail {

// <H, x> = H + <x> for abelian H; elements as local encodings.
inline std::vector<std::uint64_t> extend_subgroup(const AbelianElements& els,
                                                  const std::vector<std::uint64_t>& h,
                                                  std::uint64_t x) {
  std::set<std::uint64_t> out(h.begin(), h.end());
  std::uint64_t step = x;
  while (step != 0) {
    for (std::uint64_t e : h) out.insert(els.add(e, step));
    step = els.add(step, x);
  }
  return std::vector<std::uint64_t>(out.begin(), out.end());
}

// All subgroups of one group given by element arithmetic, as sorted element
// sets.  Breadth-first growth by single generators reaches every subgroup.
inline std::vector<std::vector<std::uint64_t>> subgroups_by_closure(const AbelianElements& els) {
  std::set<std::vector<std::uint64_t>> found;
  std::vector<std::vector<std::uint64_t>> queue;
  std::vector<std::uint64_t> trivial{0};
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<std::uint64_t> h = std::move(queue.back());
    queue.pop_back();
    for (std::uint64_t x = 1; x < els.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      auto k = extend_subgroup(els, h, x);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  return std::vector<std::vector<std::uint64_t>>(found.begin(), found.end());
}

}  // namespace detail

// Every subgroup of g exactly once.  Requires |G| <= order_bound.
inline std::vector<SubgroupHandle> enumerate_subgroups(
    const AbelianGroupType& g, std::uint64_t order_bound = kDefaultSubgroupBound) {
  if (g.order() > order_bound)
    throw domain_error("subgroup enumeration limited to |G| <= " + std::to_string(order_bound) +
                       ", got " + g.order().str());
  AbelianElements ambient(g);

  // Per-prime subgroup lists in the component's own coordinates.
  std::vector<AbelianElements> comp_els;
  std::vector<std::vector<std::vector<std::uint64_t>>> per_prime;
  std::vector<std::size_t> comp_offset;  // first factor index of each component
  std::size_t off = 0;
  for (const auto& c : g.components()) {
    comp_els.emplace_back(AbelianGroupType({c}));
    per_prime.push_back(detail::subgroups_by_closure(comp_els.back()));
    comp_offset.push_back(off);
    off += c.parts.size();
  }

  // Embed a local component element into ambient coordinates.
  auto embed = [&](std::size_t ci, std::uint64_t local) {
    auto local_coords = comp_els[ci].decode(local);
    std::vector<std::uint64_t> coords(ambient.rank(), 0);
    for (std::size_t j = 0; j < local_coords.size(); ++j)
      coords[comp_offset[ci] + j] = local_coords[j];
    return ambient.encode(coords);
  };

  std::vector<std::vector<std::uint64_t>> products{{0}};
  for (std::size_t ci = 0; ci < per_prime.size(); ++ci) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& partial : products) {
      for (const auto& local_sub : per_prime[ci]) {
        std::vector<std::uint64_t> combined;
        combined.reserve(partial.size() * local_sub.size());
        for (std::uint64_t a : partial)
          for (std::uint64_t b : local_sub) combined.push_back(ambient.add(a, embed(ci, b)));
        std::sort(combined.begin(), combined.end());
        next.push_back(std::move(combined));
      }
    }
    products = std::move(next);
  }

  std::vector<SubgroupHandle> out;
  out.reserve(products.size());
  for (auto& elems : products) {
    AbelianGroupType iso = iso_type_of_elements(ambient, elems);
    out.push_back({g, std::move(elems), std::move(iso)});
  }
  std::sort(out.begin(), out.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

// Coset group of g by the subgroup t: its isomorphism type (via profile
// inversion) and its order profile.
inline std::pair<AbelianGroupType, OrderProfile> quotient_profile(const AbelianGroupType& g,
                                                                  const SubgroupHandle& t) {
  if (t.ambient != g) throw domain_error("subgroup handle does not belong to this group");
  AbelianElements els(g);
  auto in_t = [&](std::uint64_t x) {
    return std::binary_search(t.elements.begin(), t.elements.end(), x);
  };
  if (t.elements.empty() || !in_t(0) || els.order() % t.elements.size() != 0)
    throw domain_error("malformed subgroup handle");

  OrderProfile prof;
  prof.order = Int(els.order() / t.elements.size());
  std::set<std::uint64_t> seen_reps;
  for (std::uint64_t x = 0; x < els.order(); ++x) {
    std::uint64_t rep = x;
    for (std::uint64_t s : t.elements) rep = std::min(rep, els.add(x, s));
    if (!seen_reps.insert(rep).second) continue;
    // order of xT = least k >= 1 with k.x in T
    std::uint64_t y = x, k = 1;
    while (!in_t(y)) {
      y = els.add(y, x);
      ++k;
    }
    prof.counts[k] += 1;
  }

  auto cls = classify_order_profile(prof);
  if (auto* ty = std::get_if<AbelianGroupType>(&cls)) return {*ty, prof};
  throw std::logic_error("quotient of an abelian group failed profile classification");
}

}  // namespace gradcount
