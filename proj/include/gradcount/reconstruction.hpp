#pragma once

// Inverse problems: recover the order profile phi_G from the sequence
// E(G, 1..M) by inductively solving the matrix-algebra count formula, then
// recover the abelian isomorphism type from the profile.  Also the
// non-abelian collision witness: the Heisenberg group of order p^3 shares
// its whole E-sequence with Z_p^3.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/elementary.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"
#include "gradcount/numtheory.hpp"

namespace gradcount {

// E(G, m) for m = 1..M, consecutive; optionally the claimed group order.
struct CountSequence {
  std::vector<Int> counts;  // counts[i] = E at m = i + 1
  std::optional<std::uint64_t> claimed_order;

  void validate() const {
    if (counts.empty()) throw data_error("count sequence is empty");
    if (counts.front() != 1) throw data_error("E at m = 1 must be 1");
    for (const Int& c : counts)
      if (c < 1) throw data_error("counts must be positive");
  }
};

namespace detail {

struct SequenceSolve {
  bool ok = false;
  OrderProfile profile;
  std::string reason;
};

// Inductive solve of the matrix-count formula for a candidate order n:
// phi(1) = 1, and at each m = t' the only new unknown is phi(t') with
// nonzero coefficient n/t'.  Requires counts for m = 1..n at least.
inline SequenceSolve solve_sequence_for_order(const std::vector<Int>& counts, std::uint64_t n) {
  SequenceSolve res;
  const std::uint64_t horizon = counts.size();
  if (horizon < n) {
    res.reason = "sequence provides " + std::to_string(horizon) + " terms but order " +
                 std::to_string(n) + " needs that many";
    return res;
  }
  std::map<std::uint64_t, Int> phi;
  phi[1] = 1;
  for (std::uint64_t m = 2; m <= horizon; ++m) {
    Int rhs = Int(n) * counts[m - 1];
    Int acc = 0;
    for (std::uint64_t t : divisors_of(std::gcd(m, n))) {
      if (t == m) continue;
      auto it = phi.find(t);
      if (it == phi.end()) continue;
      acc += binomial(Int(m / t) + Int(n / t) - 1, Int(m / t)) * it->second;
    }
    if (n % m == 0) {
      Int num = rhs - acc;
      Int coeff = Int(n / m);
      if (num < 0 || num % coeff != 0) {
        res.reason = "no nonnegative integer value of phi(" + std::to_string(m) +
                     ") matches the count at m = " + std::to_string(m);
        return res;
      }
      Int val = num / coeff;
      if (val > 0) phi[m] = val;
    } else if (rhs != acc) {
      res.reason = "count at m = " + std::to_string(m) + " is inconsistent with order " +
                   std::to_string(n);
      return res;
    }
  }
  Int mass = 0;
  for (const auto& [t, f] : phi) mass += f;
  if (mass != n) {
    res.reason = "recovered counts total " + mass.str() + ", not the order " + std::to_string(n);
    return res;
  }
  res.ok = true;
  res.profile.order = Int(n);
  res.profile.counts = std::move(phi);
  return res;
}

}  // namespace detail

// Recovers phi_G from an E-sequence.  When no order is claimed, candidate
// orders 1..min(M, order_scan_bound) are scanned and the solve must succeed
// for exactly one of them; E(G,1) = 1 carries no information, so the order
// can never be read off a single term.
inline OrderProfile profile_from_sequence(const CountSequence& seq,
                                          std::uint64_t order_scan_bound = 256) {
  seq.validate();
  if (seq.claimed_order) {
    std::uint64_t n = *seq.claimed_order;
    if (n == 0) throw domain_error("group order must be positive");
    if (seq.counts.size() < n)
      throw data_error("insufficient terms: order " + std::to_string(n) + " needs " +
                       std::to_string(n) + " counts, got " + std::to_string(seq.counts.size()));
    auto res = detail::solve_sequence_for_order(seq.counts, n);
    if (!res.ok) throw data_error("inconsistent sequence: " + res.reason);
    return res.profile;
  }

  std::vector<std::pair<std::uint64_t, OrderProfile>> hits;
  std::uint64_t top = std::min<std::uint64_t>(seq.counts.size(), order_scan_bound);
  for (std::uint64_t n = 1; n <= top; ++n) {
    auto res = detail::solve_sequence_for_order(seq.counts, n);
    if (res.ok) hits.emplace_back(n, std::move(res.profile));
  }
  if (hits.empty())
    throw data_error("inconsistent sequence: no group order up to " + std::to_string(top) +
                     " admits a nonnegative integer order profile");
  if (hits.size() > 1) {
    std::string orders;
    for (const auto& [n, p] : hits) {
      if (!orders.empty()) orders += ", ";
      orders += std::to_string(n);
    }
    throw data_error("ambiguous sequence: orders {" + orders + "} are all consistent; supply the order");
  }
  return std::move(hits.front().second);
}

using IdentifyResult = ProfileClassification;

// The abelian group with this profile, or a certificate that none exists.
inline IdentifyResult identify_from_profile(const OrderProfile& profile) {
  return classify_order_profile(profile);
}

struct RoundTripReport {
  bool success = false;
  AbelianGroupType recovered;
  std::vector<Int> sequence;
};

// Forward E-sequence of g to horizon M, then profile recovery and type
// identification; success means the recovered type equals g.
inline RoundTripReport round_trip(const AbelianGroupType& g, std::uint64_t horizon) {
  std::uint64_t n = checked_uint64(g.order(), "group order");
  if (horizon < n) throw domain_error("horizon must be at least |G|");
  RoundTripReport rep;
  GroupSpec spec(g);
  for (std::uint64_t m = 1; m <= horizon; ++m)
    rep.sequence.push_back(count_elementary_matrix(spec, m));
  CountSequence seq{rep.sequence, n};
  OrderProfile prof = profile_from_sequence(seq);
  auto cls = identify_from_profile(prof);
  if (auto* t = std::get_if<AbelianGroupType>(&cls)) {
    rep.recovered = *t;
    rep.success = (*t == g);
  }
  return rep;
}

// Heisenberg group mod p as a Cayley table: upper unitriangular 3x3 matrices
// over Z_p, elements (a, b, c) with
// (a,b,c)(a',b',c') = (a+a', b+b'+ac', c+c'), encoded as a*p^2 + b*p + c.
inline CayleyGroup heisenberg_group(std::uint64_t p) {
  if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
  std::uint64_t n = p * p * p;
  if (n > 512) throw domain_error("Heisenberg table for p = " + std::to_string(p) + " exceeds the Cayley cap");
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  auto enc = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<unsigned>((a * p + b) * p + c);
  };
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t a2 = 0; a2 < p; ++a2)
          for (std::uint64_t b2 = 0; b2 < p; ++b2)
            for (std::uint64_t c2 = 0; c2 < p; ++c2)
              table[enc(a, b, c)][enc(a2, b2, c2)] =
                  enc((a + a2) % p, (b + b2 + a * c2) % p, (c + c2) % p);
  return CayleyGroup(std::move(table));
}

struct CollisionReport {
  std::uint64_t prime = 0;
  std::uint64_t horizon = 0;
  bool heisenberg_nonabelian = false;
  bool exponent_is_p = false;
  bool profiles_equal = false;
  bool sequences_equal = false;
  bool ok() const {
    return heisenberg_nonabelian && exponent_is_p && profiles_equal && sequences_equal;
  }
};

// E(Heisenberg_p, m) = E(Z_p^3, m) for all m although the groups are not
// isomorphic; this is the failure of sequence identification beyond abelian
// groups.  Odd p only; exponent-2 groups are abelian.
inline CollisionReport collision_demo(std::uint64_t p, std::uint64_t horizon = 30) {
  if (p == 2) throw domain_error("no non-abelian group of exponent 2 exists");
  if (p != 3 && p != 5) throw domain_error("collision demo supports p in {3, 5}");
  CollisionReport rep;
  rep.prime = p;
  rep.horizon = horizon;

  CayleyGroup heis = heisenberg_group(p);
  GroupSpec heis_spec{heis};
  rep.heisenberg_nonabelian = !heis.is_abelian();
  rep.exponent_is_p = (heis_spec.exponent() == Int(p));

  AbelianGroupType zp3({{p, {1, 1, 1}}});
  GroupSpec zp3_spec{zp3};
  rep.profiles_equal = (order_profile(heis_spec).counts == order_profile(zp3_spec).counts);

  rep.sequences_equal = true;
  for (std::uint64_t m = 1; m <= horizon; ++m)
    if (count_elementary_matrix(heis_spec, m) != count_elementary_matrix(zp3_spec, m)) {
      rep.sequences_equal = false;
      break;
    }
  return rep;
}

// CSV interchange format: header "m,count", one row per m, counts as decimal
// strings, m consecutive from 1.
inline CountSequence read_count_sequence(std::istream& in) {
  CountSequence seq;
  std::string line;
  if (!std::getline(in, line)) throw data_error("empty sequence file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "m,count") throw data_error("expected header 'm,count', got '" + line + "'");
  std::uint64_t expect = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw data_error("malformed row '" + line + "'");
    std::string mstr = line.substr(0, comma);
    std::string cstr = line.substr(comma + 1);
    std::uint64_t m = 0;
    try {
      m = std::stoull(mstr);
    } catch (const std::exception&) {
      throw data_error("malformed m value '" + mstr + "'");
    }
    if (m != expect)
      throw data_error("rows must be consecutive from m = 1; expected " +
                       std::to_string(expect) + ", got " + mstr);
    if (cstr.empty() || cstr.find_first_not_of("0123456789") != std::string::npos)
      throw data_error("malformed count '" + cstr + "'");
    seq.counts.emplace_back(cstr);
    ++expect;
  }
  if (seq.counts.empty()) throw data_error("sequence file has no rows");
  return seq;
}

inline void write_count_sequence(std::ostream& out, const std::vector<Int>& counts) {
  out << "m,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) out << (i + 1) << ',' << counts[i].str() << '\n';
}

}  // namespace gradcount
