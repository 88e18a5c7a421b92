#pragma once

// Brute-force ground truth for elementary grading counts: stream the weight
// maps gamma(m, G), apply the right translation action, and count orbits two
// independent ways (explicit partition and Burnside fixed-point averaging).

#include <cstdint>
#include <set>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/elementary.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"

namespace gradcount {

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

// a : I_s x G -> Z>=0 with sum_g a(i,g) = m_i, flattened block-major:
// values[i*n + g] = a(i, g), group elements in canonical encoding order.
struct WeightMap {
  std::vector<std::uint32_t> values;
  friend auto operator<=>(const WeightMap&, const WeightMap&) = default;
};

inline Int gamma_size(const Int& group_order, const BlockShape& shape) {
  Int total = 1;
  for (std::uint64_t m : shape.blocks) total *= binomial(Int(m) + group_order - 1, Int(m));
  return total;
}

// Dense multiplication table for oracle work; abelian specs are materialized
// through their canonical element encoding.
inline CayleyGroup oracle_table(const GroupSpec& g, std::size_t size_cap = 512) {
  return g.is_abelian_type() ? cayley_from_abelian(g.abelian(), size_cap) : g.cayley();
}

namespace detail {

// Successor in ascending lexicographic order among compositions of a fixed
// total: bump the rightmost position that has mass to its right, then push
// all remaining mass to the last cell.
inline bool next_composition(std::uint32_t* c, std::size_t q) {
  if (q < 2) return false;
  std::uint64_t suffix = c[q - 1];
  for (std::size_t j = q - 1; j-- > 0;) {
    if (suffix > 0) {
      c[j] += 1;
      for (std::size_t l = j + 1; l < q; ++l) c[l] = 0;
      c[q - 1] = static_cast<std::uint32_t>(suffix - 1);
      return true;
    }
    suffix += c[j];
  }
  return false;
}

}  // namespace detail

// Streams gamma(m, G) exactly once in ascending lexicographic order of the
// flattened weight vector, without materializing the set.
class GammaEnumerator {
 public:
  GammaEnumerator(std::size_t group_order, const BlockShape& shape,
                  std::uint64_t cap = kDefaultEnumCap)
      : n_(group_order), shape_(shape), size_(gamma_size(Int(group_order), shape)) {
    if (size_ > cap)
      throw domain_error("enumeration cap exceeded: |gamma| = " + size_.str() + " > " +
                         std::to_string(cap));
    for (std::uint64_t m : shape.blocks)
      if (m > 0xffffffffULL) throw domain_error("block size exceeds weight-map range");
  }

  const Int& size() const { return size_; }

  bool next(WeightMap& out) {
    if (done_) return false;
    const std::size_t s = shape_.blocks.size();
    if (!started_) {
      started_ = true;
      state_.values.assign(s * n_, 0);
      for (std::size_t i = 0; i < s; ++i) reset_block(i);
      out = state_;
      return true;
    }
    for (std::size_t i = s; i-- > 0;) {
      if (detail::next_composition(state_.values.data() + i * n_, n_)) {
        for (std::size_t l = i + 1; l < s; ++l) reset_block(l);
        out = state_;
        return true;
      }
    }
    done_ = true;
    return false;
  }

 private:
  void reset_block(std::size_t i) {
    std::uint32_t* blk = state_.values.data() + i * n_;
    for (std::size_t g = 0; g < n_; ++g) blk[g] = 0;
    blk[n_ - 1] = static_cast<std::uint32_t>(shape_.blocks[i]);
  }

  std::size_t n_;
  BlockShape shape_;
  Int size_;
  WeightMap state_;
  bool started_ = false;
  bool done_ = false;
};

// Right action (a.h)(i, g) = a(i, gh), written into a caller-owned buffer.
inline void act_into(const WeightMap& a, unsigned h, const CayleyGroup& table,
                     std::size_t num_blocks, WeightMap& out) {
  const std::size_t n = table.order();
  out.values.resize(a.values.size());
  for (std::size_t i = 0; i < num_blocks; ++i)
    for (unsigned g = 0; g < n; ++g) out.values[i * n + g] = a.values[i * n + table.mul(g, h)];
}

inline WeightMap act(const WeightMap& a, unsigned h, const CayleyGroup& table, std::size_t num_blocks) {
  WeightMap b;
  act_into(a, h, table, num_blocks, b);
  return b;
}

namespace detail {

inline bool is_fixed_by(const WeightMap& a, unsigned h, const CayleyGroup& table,
                        std::size_t num_blocks) {
  const std::size_t n = table.order();
  for (std::size_t i = 0; i < num_blocks; ++i)
    for (unsigned g = 0; g < n; ++g)
      if (a.values[i * n + g] != a.values[i * n + table.mul(g, h)]) return false;
  return true;
}

inline WeightMap orbit_minimum(const WeightMap& a, const CayleyGroup& table, std::size_t num_blocks) {
  WeightMap best = a;  // the identity translate
  WeightMap scratch;
  for (unsigned h = 0; h < table.order(); ++h) {
    if (h == table.identity()) continue;
    act_into(a, h, table, num_blocks, scratch);
    if (scratch < best) std::swap(best, scratch);
  }
  return best;
}

}  // namespace detail

enum class OrbitMethod { partition, burnside };

// Lexicographically least member of each orbit, in ascending order; stable
// across runs by construction.
inline std::vector<WeightMap> orbit_representatives(const GroupSpec& g, const BlockShape& shape,
                                                    std::uint64_t cap = kDefaultEnumCap) {
  CayleyGroup table = oracle_table(g);
  const std::size_t s = shape.blocks.size();
  GammaEnumerator en(table.order(), shape, cap);
  std::set<WeightMap> canon;
  WeightMap a;
  while (en.next(a)) canon.insert(detail::orbit_minimum(a, table, s));
  return std::vector<WeightMap>(canon.begin(), canon.end());
}

inline Int count_orbits(const GroupSpec& g, const BlockShape& shape, OrbitMethod method,
                        std::uint64_t cap = kDefaultEnumCap) {
  CayleyGroup table = oracle_table(g);
  const std::size_t s = shape.blocks.size();
  const std::size_t n = table.order();
  GammaEnumerator en(n, shape, cap);

  if (method == OrbitMethod::partition) {
    std::set<WeightMap> canon;
    WeightMap a;
    while (en.next(a)) canon.insert(detail::orbit_minimum(a, table, s));
    return Int(canon.size());
  }

  // Burnside: |X/G| = (1/|G|) sum_h |Fix(h)|; one pass over gamma testing
  // every translation.
  std::vector<std::uint64_t> fix(n, 0);
  WeightMap a;
  while (en.next(a)) {
    for (unsigned h = 0; h < n; ++h)
      if (detail::is_fixed_by(a, h, table, s)) ++fix[h];
  }
  Int total = 0;
  for (std::uint64_t f : fix) total += f;
  if (total % Int(n) != 0)
    throw std::logic_error("Burnside fixed-point total " + total.str() +
                           " is not divisible by |G| = " + std::to_string(n));
  return total / Int(n);
}

// |Fix(h)| by direct enumeration; independent check of the fixed-point shape
// used in the closed formula's proof.
inline Int fixed_point_count(const GroupSpec& g, const BlockShape& shape, unsigned h,
                             std::uint64_t cap = kDefaultEnumCap) {
  CayleyGroup table = oracle_table(g);
  if (h >= table.order()) throw domain_error("group element index out of range");
  GammaEnumerator en(table.order(), shape, cap);
  Int count = 0;
  WeightMap a;
  while (en.next(a))
    if (detail::is_fixed_by(a, h, table, shape.blocks.size())) ++count;
  return count;
}

}  // namespace gradcount
