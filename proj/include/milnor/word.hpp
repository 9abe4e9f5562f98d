// Words in the free group F_n on generators x_1..x_n.
//
// A Word is always freely reduced and carries its generator count n; binary
// operations refuse to mix words of different arity.

#ifndef MILNOR_WORD_HPP_
#define MILNOR_WORD_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace milnor {

struct Letter {
  int gen;  // 1-based generator index
  int exp;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return {gen, -exp}; }
};

class Word {
public:
  Word() = default;
  explicit Word(int n) : n_(n) { check_arity(n); }
  // Reduces `raw`; throws if a generator index falls outside 1..n.
  Word(int n, std::span<const Letter> raw) : n_(n) {
    check_arity(n);
    letters_.reserve(raw.size());
    for (const Letter& l : raw)
      push(l);
  }
  Word(int n, std::initializer_list<Letter> raw)
    : Word(n, std::span<const Letter>(raw.begin(), raw.size())) {}

  static Word generator(int n, int gen, int exp = 1) {
    Letter l{gen, exp};
    return Word(n, std::span<const Letter>(&l, 1));
  }

  int n() const { return n_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  bool contains(int gen) const {
    for (const Letter& l : letters_)
      if (l.gen == gen)
        return true;
    return false;
  }

  // Appends one letter, cancelling against the last one when possible.
  void push(Letter l) {
    if (l.gen < 1 || l.gen > n_)
      fail(ErrorCode::Word, "generator index " + std::to_string(l.gen) +
                            " out of range 1.." + std::to_string(n_));
    if (l.exp != 1 && l.exp != -1)
      fail(ErrorCode::Word, "letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  Word& operator*=(const Word& other) {
    check_same(other);
    for (const Letter& l : other.letters_)
      push(l);
    return *this;
  }

  friend Word operator*(Word u, const Word& v) { return u *= v; }

  Word inverse() const {
    Word r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(it->inverse());
    return r;
  }

  // Literal equality in F_n (both sides are reduced). Equality in the
  // reduced free group is decided by rf_equal in magnus.hpp.
  friend bool operator==(const Word&, const Word&) = default;

  void check_same(const Word& other) const {
    if (other.n_ != n_)
      fail(ErrorCode::Word, "mismatched generator counts: " +
                            std::to_string(n_) + " vs " + std::to_string(other.n_));
  }

private:
  static void check_arity(int n) {
    if (n < 0)
      fail(ErrorCode::Word, "negative generator count");
  }

  int n_ = 0;
  std::vector<Letter> letters_;
};

inline Word reduce(std::span<const Letter> raw, int n) { return Word(n, raw); }

inline Word product(const Word& u, const Word& v) { return u * v; }

inline Word inverse(const Word& u) { return u.inverse(); }

// a^b = b^-1 a b
inline Word conjugate(const Word& a, const Word& b) {
  a.check_same(b);
  return b.inverse() * a * b;
}

// Commutator [a,b] = a^-1 b^-1 a b.
inline Word commutator(const Word& a, const Word& b) {
  a.check_same(b);
  return a.inverse() * b.inverse() * a * b;
}

inline Word power(const Word& u, int k) {
  Word r(u.n());
  const Word base = k < 0 ? u.inverse() : u;
  for (int i = 0; i < (k < 0 ? -k : k); ++i)
    r *= base;
  return r;
}

// Quotient map x_gen -> 1.
inline Word kill_generator(int gen, const Word& u) {
  if (gen < 1 || gen > u.n())
    fail(ErrorCode::Word, "generator index " + std::to_string(gen) + " out of range");
  Word r(u.n());
  for (const Letter& l : u.letters())
    if (l.gen != gen)
      r.push(l);
  return r;
}

// Homomorphism x_i -> images[i-1]. Inverse images are computed once.
inline Word substitute(const Word& u, std::span<const Word> images) {
  if (static_cast<int>(images.size()) != u.n())
    fail(ErrorCode::Word, "substitute: expected " + std::to_string(u.n()) +
                          " images, got " + std::to_string(images.size()));
  const int m = images.empty() ? u.n() : images.front().n();
  std::vector<Word> inverses;
  inverses.reserve(images.size());
  for (const Word& w : images) {
    if (w.n() != m)
      fail(ErrorCode::Word, "substitute: images have mixed generator counts");
    inverses.push_back(w.inverse());
  }
  Word r(m);
  for (const Letter& l : u.letters())
    r *= l.exp > 0 ? images[l.gen - 1] : inverses[l.gen - 1];
  return r;
}

} // namespace milnor

#endif
