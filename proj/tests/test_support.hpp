#pragma once

// Shared test helpers: small non-abelian groups as Cayley tables, built from
// permutation composition or the dihedral presentation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "gradcount/group.hpp"

namespace testsupport {

// S_k as a Cayley table; elements are the permutations of {0..k-1} in
// lexicographic order, product (a*b)(x) = a(b(x)).
inline gradcount::CayleyGroup symmetric_group_table(unsigned k) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<unsigned>, unsigned> index;
  for (unsigned i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  const std::size_t n = perms.size();
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<unsigned> c(k);
      for (unsigned x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = index.at(c);
    }
  return gradcount::CayleyGroup(std::move(table));
}

// Dihedral group of order 2k: elements r^a s^b encoded as 2a + b, with
// (a,b)(a',b') = (a + a' or a - a' mod k depending on b, b xor b').
inline gradcount::CayleyGroup dihedral_group_table(unsigned k) {
  const std::size_t n = 2u * k;
  auto enc = [&](unsigned a, unsigned b) { return 2u * a + b; };
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned a2 = 0; a2 < k; ++a2)
        for (unsigned b2 = 0; b2 < 2; ++b2) {
          unsigned ra = b == 0 ? (a + a2) % k : (a + k - a2 % k) % k;
          table[enc(a, b)][enc(a2, b2)] = enc(ra, b ^ b2);
        }
  return gradcount::CayleyGroup(std::move(table));
}

}  // namespace testsupport
