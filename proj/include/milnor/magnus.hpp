// The reduced Magnus algebra: integer polynomials in non-commuting variables
// X_1..X_n modulo the ideal of monomials with a repeated variable, and the
// expansion x_j -> 1 + X_j of the free group into it.
//
// The expansion factors through the reduced free group RF_n and is used as
// the equality test for RF_n throughout the library. Injectivity of the
// n-variable expansion on RF_n is a known result that this library assumes;
// classification decisions compare the (n-1)-variable expansions of reduced
// longitudes, where injectivity is the standard statement.

#ifndef MILNOR_MAGNUS_HPP_
#define MILNOR_MAGNUS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "word.hpp"

namespace milnor {

using Integer = boost::multiprecision::cpp_int;

// Maximum number of variables. Monomials are packed four bits per index.
inline constexpr int kMaxVariables = 16;

// A repeat-free monomial X_{i_1}...X_{i_k}. The empty monomial is 1.
class Monomial {
public:
  Monomial() = default;

  // Throws ErrorCode::Index on a repeated or out-of-range index.
  explicit Monomial(std::span<const int> indices) {
    for (int i : indices) {
      if (i < 1 || i > kMaxVariables)
        fail(ErrorCode::Index, "monomial index " + std::to_string(i) + " out of range");
      if (!append(i))
        fail(ErrorCode::Index, "monomial has repeated index " + std::to_string(i));
    }
  }
  Monomial(std::initializer_list<int> indices)
    : Monomial(std::span<const int>(indices.begin(), indices.size())) {}

  static Monomial variable(int i) { return Monomial{i}; }

  int degree() const { return len_; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool disjoint(const Monomial& o) const { return (mask_ & o.mask_) == 0; }
  int max_index() const {
    int m = 0;
    for (int i = 1; i <= kMaxVariables; ++i)
      if (contains(i))
        m = i;
    return m;
  }

  // 1-based index at position k (0 = leftmost).
  int at(int k) const {
    return static_cast<int>((packed_ >> (4 * (len_ - 1 - k))) & 0xF) + 1;
  }

  std::vector<int> indices() const {
    std::vector<int> r(static_cast<std::size_t>(len_));
    for (int k = 0; k < len_; ++k)
      r[static_cast<std::size_t>(k)] = at(k);
    return r;
  }

  // Appends X_i on the right; returns false (leaving *this unchanged) when
  // X_i already occurs, i.e. the product lies in the ideal.
  bool append(int i) {
    if (contains(i))
      return false;
    packed_ = (packed_ << 4) | static_cast<std::uint64_t>(i - 1);
    mask_ |= static_cast<std::uint16_t>(1u << (i - 1));
    ++len_;
    return true;
  }

  // Concatenation, valid only for disjoint monomials.
  Monomial concat(const Monomial& o) const {
    if (o.len_ == kMaxVariables)
      return o;  // *this is necessarily empty
    Monomial r;
    r.packed_ = (packed_ << (4 * o.len_)) | o.packed_;
    r.mask_ = mask_ | o.mask_;
    r.len_ = static_cast<std::uint8_t>(len_ + o.len_);
    return r;
  }

  // Graded lexicographic: by degree, then by index sequence.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.len_ != b.len_)
      return a.len_ < b.len_;
    return a.packed_ < b.packed_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::uint64_t packed_ = 0;
  std::uint16_t mask_ = 0;
  std::uint8_t len_ = 0;
};

// Element of Z<X_1..X_n> / I_r. Zero coefficients are never stored.
class ReducedPoly {
public:
  using Terms = std::map<Monomial, Integer>;

  ReducedPoly() = default;
  explicit ReducedPoly(int n) : n_(n) {
    if (n < 0 || n > kMaxVariables)
      fail(ErrorCode::Word, "reduced Magnus algebra supports 0.." +
                            std::to_string(kMaxVariables) + " variables");
  }

  static ReducedPoly one(int n) { return constant(n, 1); }
  static ReducedPoly constant(int n, const Integer& c) {
    ReducedPoly p(n);
    p.add_term(Monomial{}, c);
    return p;
  }
  static ReducedPoly monomial(int n, const Monomial& m, const Integer& c = 1) {
    ReducedPoly p(n);
    p.check_monomial(m);
    p.add_term(m, c);
    return p;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const {
    check_monomial(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  ReducedPoly& operator+=(const ReducedPoly& q) {
    check_same(q);
    for (const auto& [m, c] : q.terms_)
      add_term(m, c);
    return *this;
  }
  ReducedPoly& operator-=(const ReducedPoly& q) {
    check_same(q);
    for (const auto& [m, c] : q.terms_)
      add_term(m, -c);
    return *this;
  }
  ReducedPoly operator-() const {
    ReducedPoly r(n_);
    for (const auto& [m, c] : terms_)
      r.terms_.emplace(m, -c);
    return r;
  }
  friend ReducedPoly operator+(ReducedPoly p, const ReducedPoly& q) { return p += q; }
  friend ReducedPoly operator-(ReducedPoly p, const ReducedPoly& q) { return p -= q; }

  friend ReducedPoly operator*(const ReducedPoly& p, const ReducedPoly& q) {
    p.check_same(q);
    ReducedPoly r(p.n_);
    for (const auto& [a, ca] : p.terms_)
      for (const auto& [b, cb] : q.terms_)
        if (a.disjoint(b))
          r.add_term(a.concat(b), ca * cb);
    return r;
  }
  ReducedPoly& operator*=(const ReducedPoly& q) { return *this = *this * q; }

  // In-place right multiplication by (1 + e X_j), the image of x_j^e. Exact
  // for e = -1 as well, because X_j X_j vanishes.
  void multiply_generator(int j, int e) {
    std::vector<std::pair<Monomial, Integer>> extra;
    for (const auto& [m, c] : terms_) {
      Monomial mj = m;
      if (mj.append(j))
        extra.emplace_back(mj, e > 0 ? Integer(c) : Integer(-c));
    }
    for (auto& [m, c] : extra)
      add_term(m, c);
  }

  friend bool operator==(const ReducedPoly&, const ReducedPoly&) = default;

  void check_same(const ReducedPoly& q) const {
    if (q.n_ != n_)
      fail(ErrorCode::Word, "mismatched variable counts: " + std::to_string(n_) +
                            " vs " + std::to_string(q.n_));
  }

private:
  void check_monomial(const Monomial& m) const {
    if (m.max_index() > n_)
      fail(ErrorCode::Index, "monomial index exceeds variable count " + std::to_string(n_));
  }

  int n_ = 0;
  Terms terms_;
};

inline ReducedPoly poly_add(const ReducedPoly& p, const ReducedPoly& q) { return p + q; }
inline ReducedPoly poly_mul(const ReducedPoly& p, const ReducedPoly& q) { return p * q; }
inline Integer coefficient(const ReducedPoly& p, const Monomial& m) { return p.coefficient(m); }

// Reduced Magnus expansion.
inline ReducedPoly expand(const Word& w) {
  ReducedPoly p = ReducedPoly::one(w.n());
  for (const Letter& l : w.letters())
    p.multiply_generator(l.gen, l.exp);
  return p;
}

// Equality in the reduced free group RF_n.
inline bool rf_equal(const Word& u, const Word& v) {
  u.check_same(v);
  return expand(u) == expand(v);
}

// Number of repeat-free monomials in n variables, sum_{k=0..n} n!/(n-k)!.
inline Integer repeat_free_monomial_count(int n) {
  Integer total = 0, falling = 1;
  for (int k = 0; k <= n; ++k) {
    total += falling;
    falling *= n - k;
  }
  return total;
}

} // namespace milnor

#endif
