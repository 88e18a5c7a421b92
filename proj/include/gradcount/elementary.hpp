#pragma once

// Closed-formula counts of isomorphism classes of elementary gradings on
// matrix and upper block-triangular matrix algebras, plus the special-case
// closed forms for prime-exponent groups and cyclic prime-power groups.

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"
#include "gradcount/numtheory.hpp"

namespace gradcount {

// The tuple of diagonal block sizes (m_1, ..., m_s) of UT(m).
struct BlockShape {
  std::vector<std::uint64_t> blocks;

  explicit BlockShape(std::vector<std::uint64_t> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw domain_error("block shape must be nonempty");
    for (std::uint64_t m : blocks)
      if (m == 0) throw domain_error("block sizes must be positive");
  }
  BlockShape(std::initializer_list<std::uint64_t> b) : BlockShape(std::vector<std::uint64_t>(b)) {}

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (std::uint64_t m : blocks) t += m;
    return t;
  }

  std::uint64_t gcd() const {
    std::uint64_t g = 0;
    for (std::uint64_t m : blocks) g = std::gcd(g, m);
    return g;
  }

  BlockShape divided(std::uint64_t k) const {
    std::vector<std::uint64_t> b;
    b.reserve(blocks.size());
    for (std::uint64_t m : blocks) {
      if (m % k != 0) throw domain_error("block size not divisible by " + std::to_string(k));
      b.push_back(m / k);
    }
    return BlockShape(std::move(b));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const BlockShape&, const BlockShape&) = default;
};

namespace detail {

// Burnside numerator: sum over t | d of phi(t) * prod_i C(m_i/t + n/t - 1,
// m_i/t), with d = gcd(m_1, ..., m_s, Exp(G)).  Divisors with phi(t) = 0
// contribute nothing, so Cayley-table groups need no special handling.
inline Int burnside_numerator(const Int& group_order, std::uint64_t d, const BlockShape& shape,
                              const std::function<Int(std::uint64_t)>& phi) {
  Int sum = 0;
  for (std::uint64_t t : divisors_of(d)) {
    Int f = phi(t);
    if (f == 0) continue;
    if (group_order % t != 0)
      throw domain_error("element order " + std::to_string(t) + " does not divide the group order");
    Int cols = group_order / t;
    Int term = f;
    for (std::uint64_t m : shape.blocks) term *= binomial(Int(m / t) + cols - 1, Int(m / t));
    sum += term;
  }
  return sum;
}

inline Int exact_burnside_average(const Int& numerator, const Int& group_order) {
  if (numerator % group_order != 0)
    throw std::logic_error("Burnside numerator " + numerator.str() +
                           " is not divisible by the group order " + group_order.str());
  return numerator / group_order;
}

}  // namespace detail

// E from an order profile alone; the count depends on G only through phi_G
// and |G|.
inline Int count_elementary(const OrderProfile& profile, const BlockShape& shape) {
  std::uint64_t d = std::gcd(shape.gcd(), profile.exponent());
  Int num = detail::burnside_numerator(profile.order, d, shape,
                                       [&](std::uint64_t t) { return profile.at(t); });
  return detail::exact_burnside_average(num, profile.order);
}

inline Int count_elementary(const GroupSpec& g, const BlockShape& shape) {
  if (!g.is_abelian_type()) return count_elementary(order_profile(g.cayley()), shape);
  const AbelianGroupType& a = g.abelian();
  Int exp = a.exponent();
  Int dd = boost::multiprecision::gcd(Int(shape.gcd()), exp);
  std::uint64_t d = checked_uint64(dd, "gcd(m, Exp(G))");
  Int num = detail::burnside_numerator(a.order(), d, shape,
                                       [&](std::uint64_t t) { return phi_of(a, t); });
  return detail::exact_burnside_average(num, a.order());
}

inline Int count_elementary_matrix(const GroupSpec& g, std::uint64_t m) {
  return count_elementary(g, BlockShape{m});
}

inline Int count_elementary_matrix(const OrderProfile& profile, std::uint64_t m) {
  return count_elementary(profile, BlockShape{m});
}

// Any group of prime exponent p and order p^n: E depends only on p, n, m.
inline Int count_prime_exponent(std::uint64_t p, unsigned n, std::uint64_t m) {
  if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
  if (n == 0) throw domain_error("group must be nontrivial");
  if (m == 0) throw domain_error("matrix size must be positive");
  Int pn = int_pow(p, n);
  Int total = binomial(Int(m) + pn - 1, m);
  if (m % p == 0) total += binomial(Int(m / p) + int_pow(p, n - 1) - 1, m / p) * (pn - 1);
  return detail::exact_burnside_average(total, pn);
}

// Cyclic group of order p^n.  Writing m = p^k m' with p not dividing m', the
// published sum runs i = 1..k; only i <= n keeps |G|/p^i integral, so the sum
// is truncated at min(k, n), which is what the general formula forces.
inline Int count_cyclic_prime_power(std::uint64_t p, unsigned n, std::uint64_t m) {
  if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
  if (n == 0) throw domain_error("group must be nontrivial");
  if (m == 0) throw domain_error("matrix size must be positive");
  unsigned k = 0;
  {
    std::uint64_t rest = m;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
  }
  Int pn = int_pow(p, n);
  Int total = binomial(Int(m) + pn - 1, m);
  for (unsigned i = 1; i <= std::min(k, n); ++i) {
    std::uint64_t q = m / pow_u64_checked(p, i, "p^i");
    total += binomial(Int(q) + int_pow(p, n - i) - 1, q) * (int_pow(p, i) - int_pow(p, i - 1));
  }
  return detail::exact_burnside_average(total, pn);
}

}  // namespace gradcount
