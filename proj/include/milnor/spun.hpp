// Z/2 double-point-circle invariant of surface-link diagrams and the
// braid-closure obstruction it yields.
//
// The geometric diagram is not modelled. Input is the homology ledger: for
// each component its H_1(.; Z/2) rank, and for each circle of double points
// between two components the over and under component and the class of its
// preimage in the under component's surface.
//
// Only circles where component i passes over component j enter gamma(i, j);
// the variant summing the under-circles is not provided.

#ifndef MILNOR_SPUN_HPP_
#define MILNOR_SPUN_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace milnor {

// Little-endian over the declared basis of H_1.
using Z2Class = std::vector<bool>;

inline bool is_zero(const Z2Class& c) {
  for (bool b : c)
    if (b)
      return false;
  return true;
}

struct ComponentSurface {
  int id;
  int h1_rank;
};

struct DoubleCircle {
  int over;
  int under;
  Z2Class cls;
};

class SpunSurfaceData {
public:
  SpunSurfaceData() = default;
  SpunSurfaceData(std::vector<ComponentSurface> components, std::vector<DoubleCircle> circles)
    : components_(std::move(components)), circles_(std::move(circles)) {
    for (const ComponentSurface& c : components_) {
      if (c.id < 1)
        fail(ErrorCode::Spun, "component ids must be positive");
      if (c.h1_rank < 0)
        fail(ErrorCode::Spun, "component " + std::to_string(c.id) + " has negative rank");
      if (!rank_.emplace(c.id, c.h1_rank).second)
        fail(ErrorCode::Spun, "duplicate component " + std::to_string(c.id));
    }
    for (const DoubleCircle& g : circles_) {
      rank_of(g.over);
      if (g.over == g.under)
        fail(ErrorCode::Spun, "circle joins component " + std::to_string(g.over) + " to itself");
      if (static_cast<int>(g.cls.size()) != rank_of(g.under))
        fail(ErrorCode::Spun, "circle class has " + std::to_string(g.cls.size()) +
                              " bits but component " + std::to_string(g.under) + " has rank " +
                              std::to_string(rank_of(g.under)));
    }
  }

  const std::vector<ComponentSurface>& components() const { return components_; }
  const std::vector<DoubleCircle>& circles() const { return circles_; }

  int rank_of(int id) const {
    auto it = rank_.find(id);
    if (it == rank_.end())
      fail(ErrorCode::Spun, "unknown component " + std::to_string(id));
    return it->second;
  }

  // Component ids in increasing order.
  std::vector<int> ids() const {
    std::vector<int> r;
    for (const auto& [id, rank] : rank_)
      r.push_back(id);
    return r;
  }

private:
  std::vector<ComponentSurface> components_;
  std::vector<DoubleCircle> circles_;
  std::map<int, int> rank_;
};

// Sum in H_1(T_j; Z/2) of the classes of circles where i is over j.
inline Z2Class gamma(const SpunSurfaceData& data, int i, int j) {
  data.rank_of(i);
  if (i == j)
    fail(ErrorCode::Spun, "gamma needs two distinct components");
  Z2Class sum(static_cast<std::size_t>(data.rank_of(j)), false);
  for (const DoubleCircle& g : data.circles())
    if (g.over == i && g.under == j)
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] = sum[k] != g.cls[k];
  return sum;
}

struct ObstructionWitness {
  int j;
  int i;
  int i_prime;

  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

// A braid-closure of a string link has, for each j, at most one distinct
// nonzero value among the gamma(i, j). Returns the first (j, i, i') in
// increasing order violating that, if any.
inline std::optional<ObstructionWitness> braid_closure_obstruction(const SpunSurfaceData& data) {
  const std::vector<int> ids = data.ids();
  for (int j : ids)
    for (int i : ids) {
      if (i == j)
        continue;
      const Z2Class gi = gamma(data, i, j);
      if (is_zero(gi))
        continue;
      for (int ip : ids) {
        if (ip <= i || ip == j)
          continue;
        const Z2Class gp = gamma(data, ip, j);
        if (!is_zero(gp) && gp != gi)
          return ObstructionWitness{j, i, ip};
      }
    }
  return std::nullopt;
}

} // namespace milnor

#endif
