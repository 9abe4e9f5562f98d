// Conjugating automorphisms of the reduced free group RF_n.
//
// An automorphism is stored as a tuple of conjugators (l_1..l_n) acting by
// x_i -> l_i^-1 x_i l_i. Conjugators are arbitrary representatives; two
// automorphisms are compared through their reduced conjugators kill_i(l_i),
// whose expansions are exactly the non-repeating Milnor invariants.

#ifndef MILNOR_CONJ_AUT_HPP_
#define MILNOR_CONJ_AUT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "magnus.hpp"
#include "word.hpp"

namespace milnor {

class ConjAut {
public:
  ConjAut() = default;

  explicit ConjAut(std::vector<Word> conjugators)
    : n_(static_cast<int>(conjugators.size())), conjugators_(std::move(conjugators)) {
    for (const Word& w : conjugators_)
      if (w.n() != n_)
        fail(ErrorCode::Word, "conjugator arity " + std::to_string(w.n()) +
                              " does not match automorphism arity " + std::to_string(n_));
  }

  static ConjAut identity(int n) { return ConjAut(std::vector<Word>(static_cast<std::size_t>(n), Word(n))); }

  int n() const { return n_; }
  const std::vector<Word>& conjugators() const { return conjugators_; }
  // 1-based.
  const Word& conjugator(int i) const { return conjugators_.at(static_cast<std::size_t>(i - 1)); }

  // Images x_i^{l_i} of the generators.
  std::vector<Word> images() const {
    std::vector<Word> r;
    r.reserve(conjugators_.size());
    for (int i = 1; i <= n_; ++i)
      r.push_back(conjugate(Word::generator(n_, i), conjugator(i)));
    return r;
  }

  Word apply(const Word& w) const {
    check_arity(w.n());
    return substitute(w, images());
  }

  // kill_i(l_i): the reduced conjugator, free of x_i.
  Word normal_conjugator(int i) const {
    if (i < 1 || i > n_)
      fail(ErrorCode::Word, "conjugator index " + std::to_string(i) + " out of range");
    return kill_generator(i, conjugator(i));
  }

  void check_arity(int m) const {
    if (m != n_)
      fail(ErrorCode::Word, "mismatched generator counts: " + std::to_string(n_) +
                            " vs " + std::to_string(m));
  }

private:
  int n_ = 0;
  std::vector<Word> conjugators_;
};

inline Word apply(const ConjAut& a, const Word& w) { return a.apply(w); }

inline Word normal_conjugator(const ConjAut& a, int i) { return a.normal_conjugator(i); }

// Automorphism of `bottom` stacked under `top`: x_i -> bottom(top(x_i)).
// Conjugator: l_i(bottom) * bottom(l_i(top)).
inline ConjAut compose_stack(const ConjAut& bottom, const ConjAut& top) {
  bottom.check_arity(top.n());
  const std::vector<Word> images = bottom.images();
  std::vector<Word> c;
  c.reserve(static_cast<std::size_t>(bottom.n()));
  for (int i = 1; i <= bottom.n(); ++i)
    c.push_back(bottom.conjugator(i) * substitute(top.conjugator(i), images));
  return ConjAut(std::move(c));
}

inline bool aut_equal(const ConjAut& a, const ConjAut& b) {
  a.check_arity(b.n());
  for (int i = 1; i <= a.n(); ++i)
    if (expand(a.normal_conjugator(i)) != expand(b.normal_conjugator(i)))
      return false;
  return true;
}

inline bool is_identity(const ConjAut& a) { return aut_equal(a, ConjAut::identity(a.n())); }

// Two-sided inverse, found by iterating m_i <- psi(l_i)^-1 where psi has
// conjugators m. Each round fixes one more lower-central-series layer, so
// the iteration is stationary after at most n rounds since RF_n is nilpotent.
inline ConjAut invert(const ConjAut& a) {
  const int n = a.n();
  ConjAut psi = ConjAut::identity(n);
  bool converged = false;
  for (int round = 0; round <= n + 1; ++round) {
    const std::vector<Word> images = psi.images();
    std::vector<Word> next;
    next.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      next.push_back(kill_generator(i, substitute(a.conjugator(i), images).inverse()));
    ConjAut candidate(std::move(next));
    const bool stable = aut_equal(candidate, psi);
    psi = std::move(candidate);
    if (stable) {
      converged = true;
      break;
    }
  }
  if (!converged)
    fail(ErrorCode::Internal, "automorphism inversion did not converge");
  if (!is_identity(compose_stack(a, psi)) || !is_identity(compose_stack(psi, a)))
    fail(ErrorCode::Internal, "automorphism inversion failed verification");
  return psi;
}

} // namespace milnor

#endif
