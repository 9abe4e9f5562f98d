// Link-homotopy invariants of welded string links from Gauss diagrams.
//
// Arcs are maximal pieces of a strand between consecutive heads; tails do
// not split arcs. The Wirtinger coloring assigns to every arc an element of
// RF_n: the bottom arc of strand i is x_i and, at a head of sign e whose
// tail lies on an arc colored c,
//
//     color above = (color below)^(c^e).
//
// The i-th longitude is the product, bottom to top over the heads of strand
// i, of the factors c^e; the i-th top arc is then x_i^(longitude). With this
// convention one positive arrow from strand i to strand j gives mu_ij = +1.

#ifndef MILNOR_ENGINE_HPP_
#define MILNOR_ENGINE_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conj_aut.hpp"
#include "error.hpp"
#include "gauss_diagram.hpp"
#include "magnus.hpp"
#include "word.hpp"

namespace milnor {

enum class SweepOrder { Forward, Reverse };

// Arc colors per strand: arcs[s-1][k] is the arc of strand s above its k-th
// head (k = 0 is the bottom arc).
struct Coloring {
  std::vector<std::vector<Word>> arcs;
  int sweeps = 0;  // sweeps performed, including the final quiet one

  const Word& at(int strand, std::size_t arc) const {
    return arcs.at(static_cast<std::size_t>(strand - 1)).at(arc);
  }
};

namespace detail {

// Number of heads strictly below position `pos` on the endpoint's strand.
inline std::size_t arc_of(const GaussDiagram& d, const Endpoint& e) {
  std::size_t k = 0;
  const auto& slots = d.strand(e.strand);
  for (int p = 1; p < e.pos; ++p)
    if (slots[static_cast<std::size_t>(p - 1)].head)
      ++k;
  return k;
}

struct HeadSite {
  std::size_t arrow;
  int tail_strand;
  std::size_t tail_arc;
  int sign;
};

// Heads of each strand, bottom to top, with the arc their tail lies on.
inline std::vector<std::vector<HeadSite>> head_sites(const GaussDiagram& d) {
  std::vector<std::vector<HeadSite>> r(static_cast<std::size_t>(d.n()));
  for (int s = 1; s <= d.n(); ++s)
    for (const Slot& slot : d.strand(s))
      if (slot.head) {
        const Arrow& a = d.arrows()[slot.arrow];
        r[static_cast<std::size_t>(s - 1)].push_back({slot.arrow, a.tail.strand, arc_of(d, a.tail), a.sign});
      }
  return r;
}

} // namespace detail

// The unique RF_n-coloring, by fixpoint iteration from the all-meridian
// state. Colors of strand s are kept as x_s^w with w free of x_s, which is
// exact in RF_n since x_s commutes with its own conjugates. A color is only
// replaced when its new value differs in RF_n.
inline Coloring color(const GaussDiagram& d, SweepOrder order = SweepOrder::Forward) {
  const int n = d.n();
  const auto sites = detail::head_sites(d);
  std::vector<std::vector<Word>> conj(static_cast<std::size_t>(n));
  std::vector<std::vector<Word>> colors(static_cast<std::size_t>(n));
  std::vector<std::vector<ReducedPoly>> expansions(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) {
    const std::size_t arcs = sites[static_cast<std::size_t>(s - 1)].size() + 1;
    conj[static_cast<std::size_t>(s - 1)].assign(arcs, Word(n));
    colors[static_cast<std::size_t>(s - 1)].assign(arcs, Word::generator(n, s));
    expansions[static_cast<std::size_t>(s - 1)].assign(arcs, expand(Word::generator(n, s)));
  }

  std::vector<int> strands(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s)
    strands[static_cast<std::size_t>(s - 1)] = s;
  if (order == SweepOrder::Reverse)
    std::reverse(strands.begin(), strands.end());

  Coloring result;
  const int cap = n + 1;
  for (int sweep = 1;; ++sweep) {
    if (sweep > cap)
      fail(ErrorCode::Internal, "coloring did not reach a fixpoint within " +
                                std::to_string(cap) + " sweeps");
    bool changed = false;
    for (int s : strands) {
      const auto i = static_cast<std::size_t>(s - 1);
      const auto& heads = sites[i];
      for (std::size_t k = 0; k < heads.size(); ++k) {
        const detail::HeadSite& h = heads[k];
        Word factor = colors[static_cast<std::size_t>(h.tail_strand - 1)][h.tail_arc];
        if (h.sign < 0)
          factor = factor.inverse();
        Word w = kill_generator(s, conj[i][k] * factor);
        Word c = conjugate(Word::generator(n, s), w);
        ReducedPoly e = expand(c);
        if (e != expansions[i][k + 1]) {
          conj[i][k + 1] = std::move(w);
          colors[i][k + 1] = std::move(c);
          expansions[i][k + 1] = std::move(e);
          changed = true;
        }
      }
    }
    if (!changed) {
      result.sweeps = sweep;
      break;
    }
  }
  result.arcs = std::move(colors);
  return result;
}

// Longitude words of all strands from a coloring.
inline std::vector<Word> longitudes(const GaussDiagram& d, const Coloring& c) {
  const auto sites = detail::head_sites(d);
  std::vector<Word> r;
  r.reserve(static_cast<std::size_t>(d.n()));
  for (int s = 1; s <= d.n(); ++s) {
    Word l(d.n());
    for (const detail::HeadSite& h : sites[static_cast<std::size_t>(s - 1)]) {
      const Word& over = c.at(h.tail_strand, h.tail_arc);
      l *= h.sign > 0 ? over : over.inverse();
    }
    r.push_back(std::move(l));
  }
  return r;
}

inline std::vector<Word> longitudes(const GaussDiagram& d) { return longitudes(d, color(d)); }

inline Word longitude(const GaussDiagram& d, int i) {
  if (i < 1 || i > d.n())
    fail(ErrorCode::Index, "strand " + std::to_string(i) + " out of range");
  return longitudes(d).at(static_cast<std::size_t>(i - 1));
}

inline ConjAut phi(const GaussDiagram& d) { return ConjAut(longitudes(d)); }

// A sequence i_1 ... i_k i of pairwise distinct strand indices; the last
// entry names the component whose reduced longitude is expanded.
class MilnorIndex {
public:
  MilnorIndex() = default;
  explicit MilnorIndex(std::vector<int> seq) : seq_(std::move(seq)) {
    if (seq_.size() < 2)
      fail(ErrorCode::Index, "Milnor index needs at least two entries");
    for (std::size_t a = 0; a < seq_.size(); ++a) {
      if (seq_[a] < 1)
        fail(ErrorCode::Index, "Milnor index entries must be positive");
      for (std::size_t b = 0; b < a; ++b)
        if (seq_[a] == seq_[b])
          fail(ErrorCode::Index, "repeated index " + std::to_string(seq_[a]));
    }
  }
  MilnorIndex(std::initializer_list<int> seq) : MilnorIndex(std::vector<int>(seq)) {}

  const std::vector<int>& sequence() const { return seq_; }
  std::size_t length() const { return seq_.size(); }
  int component() const { return seq_.back(); }
  int max_entry() const { return *std::max_element(seq_.begin(), seq_.end()); }
  Monomial monomial() const { return Monomial(std::span<const int>(seq_.data(), seq_.size() - 1)); }

  // Digits concatenated; entries above 9 are separated by dots.
  std::string to_string() const {
    const bool dotted = max_entry() > 9;
    std::string s;
    for (std::size_t k = 0; k < seq_.size(); ++k) {
      if (dotted && k)
        s += '.';
      s += std::to_string(seq_[k]);
    }
    return s;
  }

  // By length, then lexicographically.
  friend bool operator<(const MilnorIndex& a, const MilnorIndex& b) {
    if (a.seq_.size() != b.seq_.size())
      return a.seq_.size() < b.seq_.size();
    return a.seq_ < b.seq_;
  }
  friend bool operator==(const MilnorIndex&, const MilnorIndex&) = default;

private:
  std::vector<int> seq_;
};

using MuTable = std::map<MilnorIndex, Integer>;

namespace detail {

inline void extend_sequences(int n, int skip, std::vector<int>& prefix, unsigned used,
                             std::vector<std::vector<int>>& out) {
  if (!prefix.empty())
    out.push_back(prefix);
  for (int j = 1; j <= n; ++j) {
    if (j == skip || (used >> j) & 1u)
      continue;
    prefix.push_back(j);
    extend_sequences(n, skip, prefix, used | (1u << j), out);
    prefix.pop_back();
  }
}

} // namespace detail

// All non-repeating Milnor indices for n strands, sorted.
inline std::vector<MilnorIndex> milnor_indices(int n) {
  std::vector<MilnorIndex> r;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> prefix;
    detail::extend_sequences(n, i, prefix, 0, seqs);
    for (auto& s : seqs) {
      s.push_back(i);
      r.emplace_back(std::move(s));
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

// Table from reduced longitudes (reduced[i-1] free of x_i), read off their
// expansions.
inline MuTable mu_table_from_reduced(std::span<const Word> reduced) {
  const int n = static_cast<int>(reduced.size());
  std::vector<ReducedPoly> ex;
  ex.reserve(reduced.size());
  for (const Word& w : reduced)
    ex.push_back(expand(w));
  MuTable t;
  for (MilnorIndex& idx : milnor_indices(n))
    t.emplace(idx, ex[static_cast<std::size_t>(idx.component() - 1)].coefficient(idx.monomial()));
  return t;
}

inline MuTable mu_table(const ConjAut& a) {
  std::vector<Word> reduced;
  for (int i = 1; i <= a.n(); ++i)
    reduced.push_back(a.normal_conjugator(i));
  return mu_table_from_reduced(reduced);
}

inline MuTable mu_table(const GaussDiagram& d) { return mu_table(phi(d)); }

inline Integer mu(const GaussDiagram& d, const MilnorIndex& index) {
  if (index.length() > static_cast<std::size_t>(d.n()) || index.max_entry() > d.n())
    fail(ErrorCode::Index, "Milnor index " + index.to_string() + " does not fit " +
                           std::to_string(d.n()) + " strands");
  const int i = index.component();
  return expand(kill_generator(i, longitude(d, i))).coefficient(index.monomial());
}

inline bool lh_equivalent(const GaussDiagram& d1, const GaussDiagram& d2) {
  if (d1.n() != d2.n())
    fail(ErrorCode::Diagram, "cannot compare diagrams with " + std::to_string(d1.n()) +
                             " and " + std::to_string(d2.n()) + " strands");
  return mu_table(d1) == mu_table(d2);
}

// A diagram whose i-th reduced longitude is targets[i-1]. For each letter
// y^e of targets[i-1], bottom to top, a head of sign e on strand i whose
// tail sits on strand y below every head of that strand, where the color is
// the plain meridian x_y. The result is checked with phi before returning.
inline GaussDiagram realize(std::span<const Word> targets) {
  const int n = static_cast<int>(targets.size());
  for (int i = 1; i <= n; ++i) {
    const Word& t = targets[static_cast<std::size_t>(i - 1)];
    if (t.n() != n)
      fail(ErrorCode::Index, "target " + std::to_string(i) + " has arity " +
                             std::to_string(t.n()) + ", expected " + std::to_string(n));
    if (t.contains(i))
      fail(ErrorCode::Index, "target for component " + std::to_string(i) +
                             " contains its own generator x" + std::to_string(i));
  }
  std::vector<int> tails(static_cast<std::size_t>(n), 0);
  for (const Word& t : targets)
    for (const Letter& l : t.letters())
      ++tails[static_cast<std::size_t>(l.gen - 1)];
  std::vector<int> next_tail(static_cast<std::size_t>(n), 0);
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) {
    int head_pos = tails[static_cast<std::size_t>(i - 1)];
    for (const Letter& l : targets[static_cast<std::size_t>(i - 1)].letters()) {
      const int tail_pos = ++next_tail[static_cast<std::size_t>(l.gen - 1)];
      arrows.push_back({{l.gen, tail_pos}, {i, ++head_pos}, l.exp});
    }
  }
  GaussDiagram d(n, std::move(arrows));
  const ConjAut a = phi(d);
  for (int i = 1; i <= n; ++i)
    if (!rf_equal(a.normal_conjugator(i), targets[static_cast<std::size_t>(i - 1)]))
      fail(ErrorCode::Internal, "realization failed verification at component " + std::to_string(i));
  return d;
}

struct InvariantCount {
  Integer total;  // non-repeating sequences of length 2..n
  Integer rank;   // rank of the group of link-homotopy classes
};

inline InvariantCount invariant_count(int n) {
  if (n < 1)
    fail(ErrorCode::Index, "strand count must be at least 1");
  InvariantCount c{0, 0};
  Integer falling = n;  // n!/(n-k)! for k = 1
  for (int k = 2; k <= n; ++k) {
    falling *= n - k + 1;
    c.total += falling;
    c.rank += falling / (k - 1);
  }
  return c;
}

} // namespace milnor

#endif
