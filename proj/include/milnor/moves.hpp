// Welded moves on Gauss diagrams.
//
// Move patterns (arrow numbers are 1-based canonical indices):
//
//   sv    self-virtualization: delete a self-arrow.
//   r1-   delete a self-arrow whose two endpoints are adjacent.
//   r1+   insert such an arrow after position p of strand s, with a given
//         sign and endpoint order (tail below head, or head below tail).
//   r2-   delete arrows k, l with opposite signs whose tails are adjacent on
//         one strand and whose heads are adjacent on one strand.
//   r2+   insert such a pair: tails after position p of strand a, heads after
//         position q of strand b. `sign` is the sign of the arrow with the
//         lower tail; `crossed` puts that arrow's head above the other head.
//         When a = b and p = q the heads go above the tails.
//   r3    arrows (a, b, c) forming a triangle: a runs top -> middle, b runs
//         top -> bottom, c runs middle -> bottom, with adjacent endpoint
//         pairs {tail a, tail b}, {head a, tail c}, {head b, head c}. The
//         orders must agree: head a below tail c exactly when head b is below
//         head c. Admissible signs: sign(a) = sign(b), sign(c) free. The move
//         swaps all three pairs.
//   oc    overcrossings commute: swap two adjacent tails.
//
// This is the Gauss-diagram form of the braid-like (all strands parallel)
// Reidemeister-3 move; together with r1, r2 and oc it generates welded
// equivalence of string links.

#ifndef MILNOR_MOVES_HPP_
#define MILNOR_MOVES_HPP_

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "gauss_diagram.hpp"

namespace milnor {

enum class MoveKind { SV, R1Insert, R1Delete, R2Insert, R2Delete, R3, OC };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::SV, MoveKind::R1Insert, MoveKind::R1Delete,
                                             MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3,
                                             MoveKind::OC};

inline std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::SV: return "sv";
    case MoveKind::R1Insert: return "r1+";
    case MoveKind::R1Delete: return "r1-";
    case MoveKind::R2Insert: return "r2+";
    case MoveKind::R2Delete: return "r2-";
    case MoveKind::R3: return "r3";
    case MoveKind::OC: return "oc";
  }
  return "?";
}

inline MoveKind parse_move_kind(std::string_view s) {
  for (MoveKind k : kAllMoveKinds)
    if (move_kind_name(k) == s)
      return k;
  fail(ErrorCode::Parse, "unknown move kind '" + std::string(s) + "'");
}

struct MoveSpec {
  MoveKind kind = MoveKind::SV;
  std::vector<std::size_t> arrows;  // sv, r1-, r2-, r3
  Endpoint slot{0, 0};              // r1+, r2+ (tails), oc
  Endpoint slot2{0, 0};             // r2+ (heads)
  int sign = 1;                     // r1+, r2+
  bool flag = false;                // r1+: head below tail; r2+: crossed

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

namespace detail {

inline bool adjacent(const Endpoint& a, const Endpoint& b) {
  return a.strand == b.strand && std::abs(a.pos - b.pos) == 1;
}

inline const Arrow& arrow_or_fail(const GaussDiagram& d, std::size_t k) {
  if (k < 1 || k > d.arrow_count())
    fail(ErrorCode::Move, "arrow " + std::to_string(k) + " does not exist");
  return d.arrow(k);
}

inline void check_slot(const GaussDiagram& d, const Endpoint& s) {
  if (s.strand < 1 || s.strand > d.n() || s.pos < 0 || s.pos > d.endpoint_count(s.strand))
    fail(ErrorCode::Move, "insertion slot " + std::to_string(s.strand) + "." +
                          std::to_string(s.pos) + " does not exist");
}

// Existing positions scaled by 8 so that new endpoints fit in between.
inline std::vector<Arrow> scaled(const GaussDiagram& d) {
  std::vector<Arrow> r = d.arrows();
  for (Arrow& a : r) {
    a.tail.pos *= 8;
    a.head.pos *= 8;
  }
  return r;
}

inline std::vector<Arrow> without(const GaussDiagram& d, std::vector<std::size_t> drop) {
  std::vector<Arrow> r;
  for (std::size_t k = 1; k <= d.arrow_count(); ++k)
    if (std::find(drop.begin(), drop.end(), k) == drop.end())
      r.push_back(d.arrow(k));
  return r;
}

inline bool r2_pair(const Arrow& x, const Arrow& y) {
  return x.sign == -y.sign && adjacent(x.tail, y.tail) && adjacent(x.head, y.head);
}

inline bool r3_triangle(const Arrow& a, const Arrow& b, const Arrow& c) {
  if (a.sign != b.sign)
    return false;
  if (!adjacent(a.tail, b.tail) || !adjacent(a.head, c.tail) || !adjacent(b.head, c.head))
    return false;
  return (a.head < c.tail) == (b.head < c.head);
}

inline void swap_positions(Endpoint& x, Endpoint& y) { std::swap(x.pos, y.pos); }

} // namespace detail

inline GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& m) {
  using namespace detail;
  auto need_arrows = [&](std::size_t count) {
    if (m.arrows.size() != count)
      fail(ErrorCode::Move, std::string(move_kind_name(m.kind)) + " needs " +
                            std::to_string(count) + " arrow(s)");
    for (std::size_t i = 0; i < count; ++i) {
      arrow_or_fail(d, m.arrows[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (m.arrows[i] == m.arrows[j])
          fail(ErrorCode::Move, "arrows of a move must be distinct");
    }
  };
  auto check_sign = [&] {
    if (m.sign != 1 && m.sign != -1)
      fail(ErrorCode::Move, "sign must be + or -");
  };

  switch (m.kind) {
    case MoveKind::SV: {
      need_arrows(1);
      if (!d.arrow(m.arrows[0]).is_self())
        fail(ErrorCode::Move, "sv: arrow " + std::to_string(m.arrows[0]) + " is not a self-arrow");
      return GaussDiagram(d.n(), without(d, m.arrows));
    }
    case MoveKind::R1Delete: {
      need_arrows(1);
      const Arrow& a = d.arrow(m.arrows[0]);
      if (!a.is_self() || !adjacent(a.tail, a.head))
        fail(ErrorCode::Move, "r1-: arrow " + std::to_string(m.arrows[0]) +
                              " is not a self-arrow with adjacent endpoints");
      return GaussDiagram(d.n(), without(d, m.arrows));
    }
    case MoveKind::R1Insert: {
      check_slot(d, m.slot);
      check_sign();
      std::vector<Arrow> arrows = scaled(d);
      const int base = m.slot.pos * 8;
      Arrow a{{m.slot.strand, base + 1}, {m.slot.strand, base + 2}, m.sign};
      if (m.flag)
        swap_positions(a.tail, a.head);
      arrows.push_back(a);
      return GaussDiagram(d.n(), std::move(arrows));
    }
    case MoveKind::R2Delete: {
      need_arrows(2);
      if (!r2_pair(d.arrow(m.arrows[0]), d.arrow(m.arrows[1])))
        fail(ErrorCode::Move, "r2-: arrows do not form a Reidemeister-2 pair");
      return GaussDiagram(d.n(), without(d, m.arrows));
    }
    case MoveKind::R2Insert: {
      check_slot(d, m.slot);
      check_slot(d, m.slot2);
      check_sign();
      std::vector<Arrow> arrows = scaled(d);
      const int tb = m.slot.pos * 8;
      const bool stacked = m.slot == m.slot2;
      const int hb = m.slot2.pos * 8 + (stacked ? 2 : 0);
      Arrow lower{{m.slot.strand, tb + 1}, {m.slot2.strand, hb + 1}, m.sign};
      Arrow upper{{m.slot.strand, tb + 2}, {m.slot2.strand, hb + 2}, -m.sign};
      if (m.flag)
        swap_positions(lower.head, upper.head);
      arrows.push_back(lower);
      arrows.push_back(upper);
      return GaussDiagram(d.n(), std::move(arrows));
    }
    case MoveKind::R3: {
      need_arrows(3);
      Arrow a = d.arrow(m.arrows[0]), b = d.arrow(m.arrows[1]), c = d.arrow(m.arrows[2]);
      if (!r3_triangle(a, b, c))
        fail(ErrorCode::Move, "r3: arrows do not form an admissible triangle");
      swap_positions(a.tail, b.tail);
      swap_positions(a.head, c.tail);
      swap_positions(b.head, c.head);
      std::vector<Arrow> arrows = without(d, m.arrows);
      arrows.insert(arrows.end(), {a, b, c});
      return GaussDiagram(d.n(), std::move(arrows));
    }
    case MoveKind::OC: {
      const Endpoint& s = m.slot;
      if (s.strand < 1 || s.strand > d.n() || s.pos < 1 || s.pos + 1 > d.endpoint_count(s.strand))
        fail(ErrorCode::Move, "oc: no adjacent endpoints at " + std::to_string(s.strand) + "." +
                              std::to_string(s.pos));
      const Slot& lo = d.slot_at(s);
      const Slot& hi = d.slot_at({s.strand, s.pos + 1});
      if (lo.head || hi.head)
        fail(ErrorCode::Move, "oc: endpoints are not both tails");
      std::vector<Arrow> arrows = d.arrows();
      swap_positions(arrows[lo.arrow].tail, arrows[hi.arrow].tail);
      return GaussDiagram(d.n(), std::move(arrows));
    }
  }
  fail(ErrorCode::Move, "unknown move kind");
}

// All applicable moves of one kind, in a deterministic order.
inline std::vector<MoveSpec> enumerate_moves(const GaussDiagram& d, MoveKind kind) {
  using namespace detail;
  std::vector<MoveSpec> r;
  const std::size_t m = d.arrow_count();
  switch (kind) {
    case MoveKind::SV:
    case MoveKind::R1Delete:
      for (std::size_t k = 1; k <= m; ++k) {
        const Arrow& a = d.arrow(k);
        if (a.is_self() && (kind == MoveKind::SV || adjacent(a.tail, a.head)))
          r.push_back({kind, {k}});
      }
      break;
    case MoveKind::R2Delete:
      for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t l = k + 1; l <= m; ++l)
          if (r2_pair(d.arrow(k), d.arrow(l)))
            r.push_back({kind, {k, l}});
      break;
    case MoveKind::R3:
      for (std::size_t a = 1; a <= m; ++a)
        for (std::size_t b = 1; b <= m; ++b) {
          if (b == a || !adjacent(d.arrow(a).tail, d.arrow(b).tail))
            continue;
          for (std::size_t c = 1; c <= m; ++c)
            if (c != a && c != b && r3_triangle(d.arrow(a), d.arrow(b), d.arrow(c)))
              r.push_back({kind, {a, b, c}});
        }
      break;
    case MoveKind::OC:
      for (int s = 1; s <= d.n(); ++s)
        for (int p = 1; p < d.endpoint_count(s); ++p)
          if (!d.slot_at({s, p}).head && !d.slot_at({s, p + 1}).head)
            r.push_back({kind, {}, {s, p}});
      break;
    case MoveKind::R1Insert:
      for (int s = 1; s <= d.n(); ++s)
        for (int p = 0; p <= d.endpoint_count(s); ++p)
          for (int sign : {1, -1})
            for (bool flag : {false, true})
              r.push_back({kind, {}, {s, p}, {0, 0}, sign, flag});
      break;
    case MoveKind::R2Insert:
      for (int a = 1; a <= d.n(); ++a)
        for (int p = 0; p <= d.endpoint_count(a); ++p)
          for (int b = 1; b <= d.n(); ++b)
            for (int q = 0; q <= d.endpoint_count(b); ++q)
              for (int sign : {1, -1})
                for (bool flag : {false, true})
                  r.push_back({kind, {}, {a, p}, {b, q}, sign, flag});
      break;
  }
  return r;
}

// Text form of the location part of a move, as accepted by `--at`:
//   sv, r1-: k      r2-: k,l      r3: a,b,c      oc: s.p
//   r1+: s.p,<+|->,<th|ht>        r2+: a.p,b.q,<+|->,<parallel|crossed>
inline std::string format_move_location(const MoveSpec& m) {
  std::ostringstream os;
  auto slot = [&](const Endpoint& e) { os << e.strand << '.' << e.pos; };
  switch (m.kind) {
    case MoveKind::SV:
    case MoveKind::R1Delete:
    case MoveKind::R2Delete:
    case MoveKind::R3:
      for (std::size_t i = 0; i < m.arrows.size(); ++i)
        os << (i ? "," : "") << m.arrows[i];
      break;
    case MoveKind::OC:
      slot(m.slot);
      break;
    case MoveKind::R1Insert:
      slot(m.slot);
      os << ',' << (m.sign > 0 ? '+' : '-') << ',' << (m.flag ? "ht" : "th");
      break;
    case MoveKind::R2Insert:
      slot(m.slot);
      os << ',';
      slot(m.slot2);
      os << ',' << (m.sign > 0 ? '+' : '-') << ',' << (m.flag ? "crossed" : "parallel");
      break;
  }
  return os.str();
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> r;
  std::size_t start = 0;
  while (true) {
    std::size_t k = s.find(sep, start);
    r.emplace_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos)
      break;
    start = k + 1;
  }
  return r;
}

inline long parse_nonneg(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string_view::npos)
    fail(ErrorCode::Parse, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return std::stol(std::string(s));
}

inline Endpoint parse_slot(std::string_view s) {
  auto parts = split(s, '.');
  if (parts.size() != 2)
    fail(ErrorCode::Parse, "bad slot '" + std::string(s) + "', expected <strand>.<pos>");
  return {static_cast<int>(parse_nonneg(parts[0], "strand")),
          static_cast<int>(parse_nonneg(parts[1], "position"))};
}

inline int parse_sign(std::string_view s) {
  if (s == "+")
    return 1;
  if (s == "-")
    return -1;
  fail(ErrorCode::Parse, "bad sign '" + std::string(s) + "'");
}

} // namespace detail

inline MoveSpec parse_move_location(MoveKind kind, std::string_view text) {
  using namespace detail;
  const auto parts = split(text, ',');
  MoveSpec m;
  m.kind = kind;
  auto expect = [&](std::size_t count) {
    if (parts.size() != count)
      fail(ErrorCode::Parse, "move location '" + std::string(text) + "' for " +
                             std::string(move_kind_name(kind)) + " needs " +
                             std::to_string(count) + " comma-separated fields");
  };
  switch (kind) {
    case MoveKind::SV:
    case MoveKind::R1Delete:
    case MoveKind::R2Delete:
    case MoveKind::R3: {
      const std::size_t count = kind == MoveKind::R3 ? 3 : kind == MoveKind::R2Delete ? 2 : 1;
      expect(count);
      for (const auto& p : parts)
        m.arrows.push_back(static_cast<std::size_t>(parse_nonneg(p, "arrow number")));
      break;
    }
    case MoveKind::OC:
      expect(1);
      m.slot = parse_slot(parts[0]);
      break;
    case MoveKind::R1Insert:
      expect(3);
      m.slot = parse_slot(parts[0]);
      m.sign = parse_sign(parts[1]);
      if (parts[2] != "th" && parts[2] != "ht")
        fail(ErrorCode::Parse, "r1+ order must be th or ht");
      m.flag = parts[2] == "ht";
      break;
    case MoveKind::R2Insert:
      expect(4);
      m.slot = parse_slot(parts[0]);
      m.slot2 = parse_slot(parts[1]);
      m.sign = parse_sign(parts[2]);
      if (parts[3] != "parallel" && parts[3] != "crossed")
        fail(ErrorCode::Parse, "r2+ order must be parallel or crossed");
      m.flag = parts[3] == "crossed";
      break;
  }
  return m;
}

} // namespace milnor

#endif
