// Reproducible random generators for property tests.
//
// Rng wraps std::mt19937_64, whose output sequence is fixed by the C++
// standard, and draws bounded integers by rejection rather than through
// std::uniform_int_distribution (whose algorithm is implementation
// defined). A given seed produces the same cases on every platform.

#ifndef MILNOR_RANDOM_HPP_
#define MILNOR_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "conj_aut.hpp"
#include "gauss_diagram.hpp"
#include "moves.hpp"
#include "word.hpp"

namespace milnor {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }
  int sign() { return coin() ? 1 : -1; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

private:
  std::mt19937_64 engine_;
};

// Random reduced word of length at most max_len (before reduction), never
// using generator `avoid` (0 = no restriction).
inline Word random_word(Rng& rng, int n, int max_len, int avoid = 0) {
  Word w(n);
  if (n == 0 || (n == 1 && avoid == 1))
    return w;
  const int len = rng.uniform(0, max_len);
  for (int k = 0; k < len; ++k) {
    int g;
    do
      g = rng.uniform(1, n);
    while (g == avoid);
    w.push({g, rng.sign()});
  }
  return w;
}

inline GaussDiagram random_diagram(Rng& rng, int n, int max_arrows) {
  const int m = rng.uniform(0, max_arrows);
  std::vector<Arrow> arrows;
  // Distinct random keys give a random interleaving of endpoints.
  int key = 0;
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    Arrow a{{rng.uniform(1, n), 0}, {rng.uniform(1, n), 0}, rng.sign()};
    a.tail.pos = ++key;
    a.head.pos = ++key;
    arrows.push_back(a);
  }
  // Shuffle positions within each strand.
  std::vector<std::vector<int*>> slots(static_cast<std::size_t>(n));
  for (Arrow& a : arrows) {
    slots[static_cast<std::size_t>(a.tail.strand - 1)].push_back(&a.tail.pos);
    slots[static_cast<std::size_t>(a.head.strand - 1)].push_back(&a.head.pos);
  }
  for (auto& s : slots)
    for (std::size_t k = s.size(); k > 1; --k)
      std::swap(*s[k - 1], *s[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(k) - 1))]);
  return GaussDiagram(n, std::move(arrows));
}

// Inserts a random admissible Reidemeister-3 triangle.
inline GaussDiagram plant_r3(Rng& rng, const GaussDiagram& d) {
  const int n = d.n();
  std::vector<Arrow> arrows = d.arrows();
  for (Arrow& a : arrows) {
    a.tail.pos *= 8;
    a.head.pos *= 8;
  }
  auto slot = [&](int strand, int offset) {
    return Endpoint{strand, rng.uniform(0, d.endpoint_count(strand)) * 8 + offset};
  };
  const int top = rng.uniform(1, n), mid = rng.uniform(1, n), bot = rng.uniform(1, n);
  Endpoint t0 = slot(top, 1), m0 = slot(mid, 3), b0 = slot(bot, 5);
  Endpoint t1{top, t0.pos + 1}, m1{mid, m0.pos + 1}, b1{bot, b0.pos + 1};
  const int s = rng.sign();
  const bool head_a_first = rng.coin();
  Arrow a{t0, head_a_first ? m0 : m1, s};
  Arrow b{t1, head_a_first ? b0 : b1, s};
  Arrow c{head_a_first ? m1 : m0, head_a_first ? b1 : b0, rng.sign()};
  if (rng.coin())
    std::swap(a.tail, b.tail);
  arrows.insert(arrows.end(), {a, b, c});
  return GaussDiagram(n, std::move(arrows));
}

inline ConjAut random_conj_aut(Rng& rng, int n, int max_len) {
  std::vector<Word> c;
  for (int i = 1; i <= n; ++i)
    c.push_back(random_word(rng, n, max_len));
  return ConjAut(std::move(c));
}

// Admissible realization targets: the i-th word avoids x_i.
inline std::vector<Word> random_targets(Rng& rng, int n, int max_len) {
  std::vector<Word> t;
  for (int i = 1; i <= n; ++i)
    t.push_back(random_word(rng, n, max_len, i));
  return t;
}

} // namespace milnor

#endif
