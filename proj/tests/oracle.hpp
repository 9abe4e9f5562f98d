// Test-only reference computations, independent of the library's reduced
// arithmetic: full non-commutative polynomials truncated by degree, with the
// repeated-index monomials discarded only at the very end.

#ifndef MILNOR_TESTS_ORACLE_HPP_
#define MILNOR_TESTS_ORACLE_HPP_

#include <map>
#include <set>
#include <vector>

#include "milnor/magnus.hpp"
#include "milnor/word.hpp"

namespace oracle {

using Mono = std::vector<int>;
using Poly = std::map<Mono, long long>;

inline Poly mul(const Poly& p, const Poly& q, std::size_t max_degree) {
  Poly r;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) {
      if (a.size() + b.size() > max_degree)
        continue;
      Mono m = a;
      m.insert(m.end(), b.begin(), b.end());
      r[m] += ca * cb;
    }
  std::erase_if(r, [](const auto& t) { return t.second == 0; });
  return r;
}

// Image of x_j^e in Z<<X>> truncated at max_degree; for e = -1 this is the
// geometric series 1 - X_j + X_j^2 - ...
inline Poly letter(int j, int e, std::size_t max_degree) {
  Poly p;
  p[{}] = 1;
  if (e > 0) {
    if (max_degree >= 1)
      p[{j}] = 1;
    return p;
  }
  Mono m;
  long long sign = 1;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    m.push_back(j);
    sign = -sign;
    p[m] = sign;
  }
  return p;
}

inline Poly full_expand(const milnor::Word& w) {
  const auto deg = static_cast<std::size_t>(w.n());
  Poly p;
  p[{}] = 1;
  for (const milnor::Letter& l : w.letters())
    p = mul(p, letter(l.gen, l.exp, deg), deg);
  return p;
}

// Drops every monomial with a repeated index.
inline Poly reduce(const Poly& p) {
  Poly r;
  for (const auto& [m, c] : p)
    if (std::set<int>(m.begin(), m.end()).size() == m.size())
      r[m] = c;
  return r;
}

inline Poly reduced_expand(const milnor::Word& w) { return reduce(full_expand(w)); }

// The library polynomial rewritten in oracle form, for comparison.
inline Poly from_library(const milnor::ReducedPoly& p) {
  Poly r;
  for (const auto& [m, c] : p.terms())
    r[m.indices()] = static_cast<long long>(c);
  return r;
}

// Number of sequences of pairwise distinct entries from 1..n with length in
// [2, n], by enumeration.
inline long long count_distinct_sequences(int n) {
  long long count = 0;
  std::vector<int> seq;
  auto rec = [&](auto&& self, unsigned used) -> void {
    if (seq.size() >= 2)
      ++count;
    for (int j = 1; j <= n; ++j)
      if (!((used >> j) & 1u)) {
        seq.push_back(j);
        self(self, used | (1u << j));
        seq.pop_back();
      }
  };
  rec(rec, 0);
  return count;
}

} // namespace oracle

#endif
