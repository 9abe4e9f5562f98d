// Gauss diagrams of welded string links on n strands.
//
// Each arrow records a classical crossing: the tail sits on the over-passing
// strand, the head on the under-passing strand. Virtual crossings carry no
// information and are not represented. Positions order the endpoints along a
// strand from bottom to top.
//
// A GaussDiagram is always canonical: positions on each strand are 1..k and
// arrows are sorted by tail. Arrow indices used by moves and the CLI refer
// to this order (1-based).

#ifndef MILNOR_GAUSS_DIAGRAM_HPP_
#define MILNOR_GAUSS_DIAGRAM_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace milnor {

struct Endpoint {
  int strand;
  int pos;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Arrow {
  Endpoint tail;  // over
  Endpoint head;  // under
  int sign;       // +1 or -1

  bool is_self() const { return tail.strand == head.strand; }
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// One endpoint slot on a strand, in bottom-to-top order.
struct Slot {
  std::size_t arrow;
  bool head;
};

class GaussDiagram {
public:
  GaussDiagram() = default;
  explicit GaussDiagram(int n) : n_(n) {
    if (n < 0)
      fail(ErrorCode::Diagram, "negative strand count");
    layout_.resize(static_cast<std::size_t>(n));
  }

  // Validates and canonicalizes. Positions only need to be distinct per
  // strand; they are renumbered to 1..k preserving order.
  GaussDiagram(int n, std::vector<Arrow> arrows) : GaussDiagram(n) {
    for (const Arrow& a : arrows) {
      for (const Endpoint& e : {a.tail, a.head})
        if (e.strand < 1 || e.strand > n)
          fail(ErrorCode::Diagram, "strand " + std::to_string(e.strand) +
                                   " out of range 1.." + std::to_string(n));
      if (a.sign != 1 && a.sign != -1)
        fail(ErrorCode::Diagram, "arrow sign must be +1 or -1");
    }
    // Renumber positions per strand.
    std::vector<std::vector<std::pair<int, Endpoint*>>> per(static_cast<std::size_t>(n));
    for (Arrow& a : arrows)
      for (Endpoint* e : {&a.tail, &a.head})
        per[static_cast<std::size_t>(e->strand - 1)].emplace_back(e->pos, e);
    for (auto& v : per) {
      std::sort(v.begin(), v.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0 && v[k].first == v[k - 1].first)
          fail(ErrorCode::Diagram, "duplicate position " + std::to_string(v[k].first) +
                                   " on strand " + std::to_string(v[k].second->strand));
        v[k].second->pos = static_cast<int>(k) + 1;
      }
    }
    std::sort(arrows.begin(), arrows.end());
    arrows_ = std::move(arrows);
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
      const Arrow& a = arrows_[k];
      slot_ref(a.tail) = {k, false};
      slot_ref(a.head) = {k, true};
    }
  }

  int n() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  // 1-based arrow access.
  const Arrow& arrow(std::size_t k) const { return arrows_.at(k - 1); }

  // Endpoints of strand s (1-based) from bottom to top; entry p-1 is position p.
  const std::vector<Slot>& strand(int s) const { return layout_.at(static_cast<std::size_t>(s - 1)); }
  int endpoint_count(int s) const { return static_cast<int>(strand(s).size()); }
  const Slot& slot_at(Endpoint e) const { return strand(e.strand).at(static_cast<std::size_t>(e.pos - 1)); }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

private:
  Slot& slot_ref(const Endpoint& e) {
    auto& v = layout_[static_cast<std::size_t>(e.strand - 1)];
    if (v.size() < static_cast<std::size_t>(e.pos))
      v.resize(static_cast<std::size_t>(e.pos));
    return v[static_cast<std::size_t>(e.pos - 1)];
  }

  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<Slot>> layout_;
};

inline GaussDiagram validate(int n, std::vector<Arrow> arrows) {
  return GaussDiagram(n, std::move(arrows));
}

// d1 below d2.
inline GaussDiagram stack(const GaussDiagram& d1, const GaussDiagram& d2) {
  if (d1.n() != d2.n())
    fail(ErrorCode::Diagram, "cannot stack diagrams with " + std::to_string(d1.n()) +
                             " and " + std::to_string(d2.n()) + " strands");
  std::vector<Arrow> arrows = d1.arrows();
  for (Arrow a : d2.arrows()) {
    a.tail.pos += d1.endpoint_count(a.tail.strand);
    a.head.pos += d1.endpoint_count(a.head.strand);
    arrows.push_back(a);
  }
  return GaussDiagram(d1.n(), std::move(arrows));
}

inline std::vector<Arrow> self_arrows(const GaussDiagram& d) {
  std::vector<Arrow> r;
  for (const Arrow& a : d.arrows())
    if (a.is_self())
      r.push_back(a);
  return r;
}

inline GaussDiagram without_self_arrows(const GaussDiagram& d) {
  std::vector<Arrow> r;
  for (const Arrow& a : d.arrows())
    if (!a.is_self())
      r.push_back(a);
  return GaussDiagram(d.n(), std::move(r));
}

} // namespace milnor

#endif
