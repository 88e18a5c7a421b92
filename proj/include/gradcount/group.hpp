#pragma once

// Finite groups for grading counts: abelian groups in primary decomposition
// (one integer partition per prime) and arbitrary groups as fully verified
// Cayley tables.  The primary decomposition is the working form because both
// the order-count formula and its inversion operate prime by prime; invariant
// factors are derived for display only.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/numtheory.hpp"

namespace gradcount {

// G(p) = Z_{p^{u_1}} x ... x Z_{p^{u_t}}; parts non-increasing, all positive.
struct PrimaryComponent {
  std::uint64_t prime = 0;
  std::vector<unsigned> parts;

  unsigned alpha() const {
    unsigned a = 0;
    for (unsigned u : parts) a += u;
    return a;
  }
  unsigned largest_part() const { return parts.empty() ? 0 : parts.front(); }

  friend auto operator<=>(const PrimaryComponent&, const PrimaryComponent&) = default;
};

class AbelianGroupType {
 public:
  AbelianGroupType() = default;  // trivial group

  explicit AbelianGroupType(std::vector<PrimaryComponent> components)
      : components_(std::move(components)) {
    for (auto& c : components_) {
      if (!is_prime(c.prime))
        throw domain_error("component base " + std::to_string(c.prime) + " is not prime");
      if (c.parts.empty()) throw domain_error("primary component has an empty partition");
      std::sort(c.parts.begin(), c.parts.end(), std::greater<>());
      if (c.parts.back() == 0) throw domain_error("partition parts must be positive");
    }
    std::sort(components_.begin(), components_.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.prime < b.prime; });
    for (std::size_t i = 1; i < components_.size(); ++i)
      if (components_[i].prime == components_[i - 1].prime)
        throw domain_error("duplicate prime in primary decomposition");
  }

  const std::vector<PrimaryComponent>& components() const { return components_; }
  bool is_trivial() const { return components_.empty(); }

  Int order() const {
    Int n = 1;
    for (const auto& c : components_) n *= int_pow(c.prime, c.alpha());
    return n;
  }

  // LCM of element orders = product of the largest part per prime.
  Int exponent() const {
    Int e = 1;
    for (const auto& c : components_) e *= int_pow(c.prime, c.largest_part());
    return e;
  }

  // Cyclic factor orders p^{u_i}, primes ascending, parts non-increasing
  // within a prime.  This fixed list backs the mixed-radix element encoding.
  std::vector<std::uint64_t> cyclic_factor_orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& c : components_)
      for (unsigned u : c.parts)
        out.push_back(pow_u64_checked(c.prime, u, "cyclic factor order"));
    return out;
  }

  // Invariant factors d_1, d_2, ... with d_{i+1} | d_i (largest first).
  std::vector<Int> invariant_factors() const {
    std::size_t depth = 0;
    for (const auto& c : components_) depth = std::max(depth, c.parts.size());
    std::vector<Int> out(depth, Int(1));
    for (const auto& c : components_)
      for (std::size_t j = 0; j < c.parts.size(); ++j) out[j] *= int_pow(c.prime, c.parts[j]);
    return out;
  }

  std::string to_string() const {
    auto inv = invariant_factors();
    if (inv.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (i) s += 'x';
      s += 'Z';
      s += inv[i].str();
    }
    return s;
  }

  friend auto operator<=>(const AbelianGroupType&, const AbelianGroupType&) = default;

 private:
  std::vector<PrimaryComponent> components_;
};

// Grammar: Z{n} (x Z{n})*, case-insensitive, whitespace ignored, every n >= 1.
// Each Z_n splits into prime-power cyclic factors which merge into the
// per-prime partitions.
inline AbelianGroupType make_abelian(std::string_view spec) {
  std::string s;
  for (char ch : spec)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s.empty()) throw parse_error("empty group spec");

  std::map<std::uint64_t, std::vector<unsigned>> per_prime;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != 'z')
      throw parse_error("expected 'Z' at position " + std::to_string(pos) + " in '" + s + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected digits after 'Z' in '" + s + "'");
    if (pos - start > 18) throw parse_error("cyclic order too large in '" + s + "'");
    std::uint64_t n = std::stoull(std::string(s.substr(start, pos - start)));
    if (n == 0) throw parse_error("Z0 is not a group");
    for (const auto& [p, e] : factorize(n)) per_prime[p].push_back(e);
    if (pos == s.size()) break;
    if (s[pos] != 'x') throw parse_error("expected 'x' at position " + std::to_string(pos) + " in '" + s + "'");
    ++pos;
  }

  std::vector<PrimaryComponent> comps;
  for (auto& [p, parts] : per_prime) comps.push_back({p, std::move(parts)});
  return AbelianGroupType(std::move(comps));
}

// phi_G as a map t -> #elements of order t; only nonzero entries are stored.
struct OrderProfile {
  Int order = 1;
  std::map<std::uint64_t, Int> counts;  // always contains {1 -> 1}

  Int at(std::uint64_t t) const {
    auto it = counts.find(t);
    return it == counts.end() ? Int(0) : it->second;
  }

  // LCM of the element orders.  (The maximal element order can be a proper
  // divisor of this for non-abelian groups, e.g. A_4.)
  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& [t, f] : counts) e = std::lcm(e, t);
    return e;
  }

  Int total() const {
    Int s = 0;
    for (const auto& [t, f] : counts) s += f;
    return s;
  }

  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

// alpha_lambda(s) for a partition lambda = (u_1 >= ... >= u_t) of alpha:
// alpha for s > u_1, else alpha - (u_1+...+u_l) + l*s with l maximal such
// that u_l >= s.  Then #\{x in G(p) : x^{p^s} = e\} = p^{alpha_lambda(s)}.
inline unsigned alpha_lambda(const std::vector<unsigned>& parts, unsigned s) {
  unsigned alpha = 0;
  for (unsigned u : parts) alpha += u;
  if (s == 0) return 0;
  if (parts.empty() || s > parts.front()) return alpha;
  unsigned head = 0, l = 0;
  for (unsigned u : parts) {
    if (u < s) break;
    head += u;
    ++l;
  }
  return alpha - head + l * s;
}

// #elements of order exactly p^s in the component (p, parts).
inline Int component_phi(std::uint64_t p, const std::vector<unsigned>& parts, unsigned s) {
  if (s == 0) return 1;
  return int_pow(p, alpha_lambda(parts, s)) - int_pow(p, alpha_lambda(parts, s - 1));
}

// phi_G(t) for one divisor, by the per-prime product formula; avoids
// materializing the whole profile.
inline Int phi_of(const AbelianGroupType& g, std::uint64_t t) {
  if (t == 0) throw domain_error("element order must be positive");
  Int result = 1;
  for (const auto& [p, s] : factorize(t)) {
    const PrimaryComponent* comp = nullptr;
    for (const auto& c : g.components())
      if (c.prime == p) comp = &c;
    if (comp == nullptr) return 0;
    Int f = component_phi(p, comp->parts, s);
    if (f == 0) return 0;
    result *= f;
  }
  return result;
}

inline OrderProfile order_profile(const AbelianGroupType& g) {
  OrderProfile prof;
  prof.order = g.order();
  std::vector<std::pair<std::uint64_t, Int>> entries{{1, Int(1)}};
  for (const auto& c : g.components()) {
    std::vector<std::pair<std::uint64_t, Int>> next;
    for (unsigned s = 0; s <= c.largest_part(); ++s) {
      Int f = component_phi(c.prime, c.parts, s);
      std::uint64_t ps = pow_u64_checked(c.prime, s, "order-profile support");
      for (const auto& [t, v] : entries)
        next.emplace_back(mul_u64_checked(t, ps, "order-profile support"), v * f);
    }
    entries = std::move(next);
  }
  for (auto& [t, v] : entries) prof.counts[t] = std::move(v);
  return prof;
}

// An arbitrary finite group as a multiplication table over element indices
// 0..n-1.  All group axioms are verified at construction: Latin square,
// two-sided identity, associativity over every triple, two-sided inverses.
class CayleyGroup {
 public:
  explicit CayleyGroup(std::vector<std::vector<unsigned>> table, std::size_t size_cap = 512)
      : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw data_error("Cayley table is empty");
    if (n > size_cap)
      throw domain_error("Cayley table order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(size_cap));
    for (const auto& row : table_) {
      if (row.size() != n) throw data_error("Cayley table is not square");
      for (unsigned v : row)
        if (v >= n) throw data_error("Cayley table entry out of range");
    }
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[table_[a][b]]) throw data_error("Cayley table row " + std::to_string(a) + " is not a permutation");
        seen[table_[a][b]] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[table_[b][a]]) throw data_error("Cayley table column " + std::to_string(a) + " is not a permutation");
        seen[table_[b][a]] = 1;
      }
    }
    identity_ = n;
    for (unsigned e = 0; e < n; ++e) {
      bool ok = true;
      for (unsigned x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ == n) throw data_error("Cayley table has no two-sided identity");
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw data_error("Cayley table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    inverse_.resize(n);
    for (unsigned a = 0; a < n; ++a) {
      bool found = false;
      for (unsigned b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) {
          inverse_[a] = b;
          found = true;
          break;
        }
      if (!found) throw data_error("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  std::size_t order() const { return table_.size(); }
  unsigned identity() const { return static_cast<unsigned>(identity_); }
  unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
  unsigned inverse(unsigned a) const { return inverse_[a]; }
  const std::vector<std::vector<unsigned>>& table() const { return table_; }

  std::uint64_t element_order(unsigned a) const {
    std::uint64_t k = 1;
    unsigned x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (unsigned a = 0; a < order(); ++a)
      for (unsigned b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  std::vector<std::vector<unsigned>> table_;
  std::size_t identity_;
  std::vector<unsigned> inverse_;
};

inline OrderProfile order_profile(const CayleyGroup& g) {
  OrderProfile prof;
  prof.order = g.order();
  for (unsigned a = 0; a < g.order(); ++a) prof.counts[g.element_order(a)] += 1;
  return prof;
}

// A group given either by its abelian invariants or by a Cayley table.
class GroupSpec {
 public:
  GroupSpec(AbelianGroupType t) : v_(std::move(t)) {}
  GroupSpec(CayleyGroup g) : v_(std::move(g)) {}

  bool is_abelian_type() const { return std::holds_alternative<AbelianGroupType>(v_); }
  const AbelianGroupType& abelian() const {
    if (!is_abelian_type()) throw domain_error("operation requires an abelian group given by invariants");
    return std::get<AbelianGroupType>(v_);
  }
  const CayleyGroup& cayley() const { return std::get<CayleyGroup>(v_); }

  Int order() const {
    return is_abelian_type() ? abelian().order() : Int(cayley().order());
  }

  Int exponent() const {
    if (is_abelian_type()) return abelian().exponent();
    std::uint64_t e = 1;
    for (unsigned a = 0; a < cayley().order(); ++a) e = std::lcm(e, cayley().element_order(a));
    return Int(e);
  }

  std::string describe() const {
    if (is_abelian_type()) return abelian().to_string();
    return "cayley(order=" + std::to_string(cayley().order()) + ")";
  }

 private:
  std::variant<AbelianGroupType, CayleyGroup> v_;
};

inline OrderProfile order_profile(const GroupSpec& g) {
  return g.is_abelian_type() ? order_profile(g.abelian()) : order_profile(g.cayley());
}

inline Int phi_of(const GroupSpec& g, std::uint64_t t) {
  if (g.is_abelian_type()) return phi_of(g.abelian(), t);
  Int c = 0;
  for (unsigned a = 0; a < g.cayley().order(); ++a)
    if (g.cayley().element_order(a) == t) ++c;
  return c;
}

// Mixed-radix element arithmetic over the canonical cyclic factor list.
// Encodings are deterministic, which makes orbit and subgroup deduplication
// canonical.
class AbelianElements {
 public:
  explicit AbelianElements(const AbelianGroupType& type)
      : type_(type), radices_(type.cyclic_factor_orders()) {
    order_ = 1;
    for (std::uint64_t d : radices_) order_ = mul_u64_checked(order_, d, "group order");
    strides_.assign(radices_.size(), 1);
    for (std::size_t i = radices_.size(); i-- > 1;)
      strides_[i - 1] = mul_u64_checked(strides_[i], radices_[i], "encoding stride");
  }

  const AbelianGroupType& type() const { return type_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return radices_.size(); }
  const std::vector<std::uint64_t>& radices() const { return radices_; }

  std::vector<std::uint64_t> decode(std::uint64_t a) const {
    std::vector<std::uint64_t> c(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      c[i] = (a / strides_[i]) % radices_[i];
    }
    return c;
  }

  std::uint64_t encode(const std::vector<std::uint64_t>& c) const {
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) a += (c[i] % radices_[i]) * strides_[i];
    return a;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      std::uint64_t ai = (a / strides_[i]) % radices_[i];
      std::uint64_t bi = (b / strides_[i]) % radices_[i];
      r += ((ai + bi) % radices_[i]) * strides_[i];
    }
    return r;
  }

  std::uint64_t neg(std::uint64_t a) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      std::uint64_t ai = (a / strides_[i]) % radices_[i];
      r += ((radices_[i] - ai) % radices_[i]) * strides_[i];
    }
    return r;
  }

  std::uint64_t element_order(std::uint64_t a) const {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      std::uint64_t ai = (a / strides_[i]) % radices_[i];
      o = std::lcm(o, radices_[i] / std::gcd(radices_[i], ai));
    }
    return o;
  }

 private:
  AbelianGroupType type_;
  std::vector<std::uint64_t> radices_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

inline CayleyGroup cayley_from_abelian(const AbelianGroupType& g, std::size_t size_cap = 512) {
  AbelianElements els(g);
  if (els.order() > size_cap)
    throw domain_error("group of order " + std::to_string(els.order()) +
                       " exceeds Cayley materialization cap " + std::to_string(size_cap));
  const std::size_t n = static_cast<std::size_t>(els.order());
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<unsigned>(els.add(a, b));
  return CayleyGroup(std::move(table), size_cap);
}

// All partitions of n, each non-increasing, in a fixed deterministic order.
inline std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned u = std::min(rest, max_part); u >= 1; --u) {
      cur.push_back(u);
      rec(rest - u, u);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Every abelian group of order n, exactly once, deterministic order.
inline std::vector<AbelianGroupType> abelian_types_of_order(std::uint64_t n) {
  auto fac = factorize(n);
  std::vector<AbelianGroupType> out;
  std::vector<PrimaryComponent> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == fac.size()) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& parts : partitions_of(fac[i].exponent)) {
      cur.push_back({fac[i].prime, parts});
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Cumulative per-prime order counts: psi[p][s] = #elements whose order
// divides p^s, restricted to p-power orders.
struct PsiProfile {
  std::map<std::uint64_t, std::vector<Int>> per_prime;
};

inline PsiProfile psi_profile(const OrderProfile& prof) {
  PsiProfile psi;
  std::map<std::uint64_t, std::map<unsigned, Int>> raw;
  for (const auto& [t, f] : prof.counts) {
    if (t == 1) continue;
    auto fac = factorize(t);
    if (fac.size() != 1) continue;  // only prime-power orders enter psi
    raw[fac[0].prime][fac[0].exponent] = f;
  }
  for (const auto& [p, by_s] : raw) {
    unsigned smax = by_s.rbegin()->first;
    std::vector<Int> cum(smax + 1, Int(1));
    for (unsigned s = 1; s <= smax; ++s) {
      cum[s] = cum[s - 1];
      auto it = by_s.find(s);
      if (it != by_s.end()) cum[s] += it->second;
    }
    psi.per_prime[p] = std::move(cum);
  }
  return psi;
}

// Witness that no abelian group realizes a given order profile.
struct NonAbelianCertificate {
  std::string reason;
};

using ProfileClassification = std::variant<AbelianGroupType, NonAbelianCertificate>;

namespace detail {
// log_p(v) when v is an exact power of p, else nullopt.
inline std::optional<unsigned> exact_log(const Int& v, std::uint64_t p) {
  Int x = v;
  unsigned l = 0;
  while (x > 1) {
    if (x % p != 0) return std::nullopt;
    x /= p;
    ++l;
  }
  if (x != 1) return std::nullopt;
  return l;
}
}  // namespace detail

// Recovers the unique abelian group with the given order profile, or returns
// a certificate that none exists.  Per prime, psi(p^s) must be a power of p
// whose exponent increments form a valid conjugate partition; the candidate
// assembled from those partitions must reproduce the profile exactly.
inline ProfileClassification classify_order_profile(const OrderProfile& prof) {
  if (prof.at(1) != 1) throw data_error("order profile must have phi(1) = 1");
  if (prof.total() != prof.order) throw data_error("order profile mass does not match group order");
  for (const auto& [t, f] : prof.counts)
    if (f < 0) throw data_error("order profile has a negative count");

  std::uint64_t n = checked_uint64(prof.order, "group order for classification");
  auto fac = factorize(n);

  for (const auto& [t, f] : prof.counts)
    if (n % t != 0)
      return NonAbelianCertificate{"element order " + std::to_string(t) +
                                   " does not divide the group order " + std::to_string(n)};

  PsiProfile psi = psi_profile(prof);
  std::vector<PrimaryComponent> comps;
  for (const auto& [p, alpha] : fac) {
    auto it = psi.per_prime.find(p);
    if (it == psi.per_prime.end())
      return NonAbelianCertificate{"no element of order " + std::to_string(p) +
                                   " although " + std::to_string(p) + " divides the order"};
    const std::vector<Int>& cum = it->second;
    if (cum.back() != int_pow(p, alpha))
      return NonAbelianCertificate{"elements of " + std::to_string(p) +
                                   "-power order do not total " + int_pow(p, alpha).str()};
    std::vector<unsigned> conj;
    unsigned prev = 0;
    for (std::size_t s = 1; s < cum.size(); ++s) {
      auto lg = detail::exact_log(cum[s], p);
      if (!lg)
        return NonAbelianCertificate{"psi(" + std::to_string(p) + "^" + std::to_string(s) +
                                     ") = " + cum[s].str() + " is not a power of " + std::to_string(p)};
      if (*lg <= prev)
        return NonAbelianCertificate{"cumulative " + std::to_string(p) +
                                     "-power counts fail to increase strictly"};
      unsigned inc = *lg - prev;
      if (!conj.empty() && inc > conj.back())
        return NonAbelianCertificate{"cumulative " + std::to_string(p) +
                                     "-power counts are not consistent with a partition"};
      conj.push_back(inc);
      prev = *lg;
    }
    // transpose the conjugate increments back into the partition
    std::vector<unsigned> parts;
    for (unsigned j = 1; j <= conj.front(); ++j) {
      unsigned cnt = 0;
      for (unsigned c : conj)
        if (c >= j) ++cnt;
      parts.push_back(cnt);
    }
    comps.push_back({p, std::move(parts)});
  }

  AbelianGroupType candidate(std::move(comps));
  if (order_profile(candidate).counts != prof.counts)
    return NonAbelianCertificate{"profile is not multiplicative across its primary parts"};
  return candidate;
}

}  // namespace gradcount
