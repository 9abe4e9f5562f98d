// Randomized property checks over every module. Shared by `milnor selftest`
// and the acceptance suite; each check draws its cases from the given Rng,
// so a (seed, iterations) pair reproduces a run exactly.

#ifndef MILNOR_PROPERTIES_HPP_
#define MILNOR_PROPERTIES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conj_aut.hpp"
#include "engine.hpp"
#include "gauss_diagram.hpp"
#include "magnus.hpp"
#include "moves.hpp"
#include "random.hpp"
#include "spun.hpp"
#include "text.hpp"
#include "word.hpp"

namespace milnor {

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::optional<std::string> failure;  // first counterexample, if any

  bool passed() const { return !failure; }
};

namespace detail {

using CaseFn = std::function<std::optional<std::string>(Rng&)>;

inline PropertyReport run_cases(std::string name, Rng& rng, std::size_t iters, const CaseFn& fn) {
  PropertyReport r;
  r.name = std::move(name);
  for (std::size_t k = 0; k < iters; ++k) {
    ++r.cases;
    try {
      if (auto f = fn(rng)) {
        r.failure = "case " + std::to_string(k) + ": " + *f;
        break;
      }
    } catch (const std::exception& e) {
      r.failure = "case " + std::to_string(k) + ": exception: " + e.what();
      break;
    }
  }
  return r;
}

inline std::string show(const Word& w) { return "[" + format_word(w) + "]"; }

inline std::string show(const GaussDiagram& d) {
  std::string s = format_gauss(d);
  for (char& ch : s)
    if (ch == '\n')
      ch = ';';
  return s;
}

} // namespace detail

// ---- word-core ----

inline PropertyReport prop_word_laws(Rng& rng, std::size_t iters) {
  return detail::run_cases("word: reduce idempotent, inverse, homomorphisms, conjugation", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 5);
      const Word u = random_word(g, n, 40), v = random_word(g, n, 40);
      if (reduce(u.letters(), n) != u)
        return "reduce not idempotent on " + detail::show(u);
      if (!(u * u.inverse()).empty() || !(u.inverse() * u).empty())
        return "u u^-1 != e for " + detail::show(u);
      const int i = g.uniform(1, n);
      if (kill_generator(i, u * v) != kill_generator(i, u) * kill_generator(i, v))
        return "kill_generator not a homomorphism";
      std::vector<Word> images;
      for (int k = 1; k <= n; ++k)
        images.push_back(random_word(g, n, 4));
      if (substitute(u * v, images) != substitute(u, images) * substitute(v, images))
        return "substitute not a homomorphism";
      if (conjugate(conjugate(u, v), v.inverse()) != u)
        return "conjugation by v then v^-1 is not the identity";
      return std::nullopt;
    });
}

// ---- magnus-ring ----

inline PropertyReport prop_magnus_exact(Rng& rng, std::size_t iters) {
  return detail::run_cases("magnus: multiplicative, inverses, relators, support", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 5);
      const Word u = random_word(g, n, 30), v = random_word(g, n, 30);
      const ReducedPoly eu = expand(u);
      if (expand(u * v) != eu * expand(v))
        return "expand(uv) != expand(u)expand(v) for " + detail::show(u) + " " + detail::show(v);
      if (eu * expand(u.inverse()) != ReducedPoly::one(n))
        return "expand(u)expand(u^-1) != 1 for " + detail::show(u);
      if (eu.coefficient(Monomial{}) != 1)
        return "constant term is not 1";
      if (Integer(eu.size()) > repeat_free_monomial_count(n))
        return "support larger than the number of repeat-free monomials";
      const int i = g.uniform(1, n);
      const Word xi = Word::generator(n, i);
      const Word a = random_word(g, n, 8), b = random_word(g, n, 8);
      if (expand(commutator(conjugate(xi, a), conjugate(xi, b))) != ReducedPoly::one(n))
        return "relator [x_i^g, x_i^h] does not expand to 1";
      return std::nullopt;
    });
}

// ---- conj-aut ----

inline PropertyReport prop_aut_monoid(Rng& rng, std::size_t iters) {
  return detail::run_cases("conj-aut: associativity, unit, apply respects composition", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 4);
      const ConjAut a = random_conj_aut(g, n, 4), b = random_conj_aut(g, n, 4), c = random_conj_aut(g, n, 4);
      if (!aut_equal(compose_stack(compose_stack(a, b), c), compose_stack(a, compose_stack(b, c))))
        return "compose_stack not associative";
      const ConjAut id = ConjAut::identity(n);
      if (!aut_equal(compose_stack(id, a), a) || !aut_equal(compose_stack(a, id), a))
        return "identity is not neutral";
      const ConjAut ab = compose_stack(a, b);
      for (int i = 1; i <= n; ++i) {
        const Word x = Word::generator(n, i);
        if (!rf_equal(ab.apply(x), a.apply(b.apply(x))))
          return "apply(compose_stack(a,b), x" + std::to_string(i) + ") != a(b(x))";
      }
      return std::nullopt;
    });
}

inline PropertyReport prop_aut_inverse(Rng& rng, std::size_t iters) {
  return detail::run_cases("conj-aut: invert is two-sided, meridian powers irrelevant", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 4);
      const ConjAut a = phi(random_diagram(g, n, 8));
      const ConjAut inv = invert(a);
      if (!is_identity(compose_stack(a, inv)) || !is_identity(compose_stack(inv, a)))
        return "invert is not a two-sided inverse";
      std::vector<Word> shifted = a.conjugators();
      const int i = g.uniform(1, n);
      shifted[static_cast<std::size_t>(i - 1)] *= power(Word::generator(n, i), g.uniform(-3, 3));
      if (!aut_equal(a, ConjAut(shifted)))
        return "aut_equal sensitive to a meridian power";
      return std::nullopt;
    });
}

// ---- gauss-diagram ----

inline PropertyReport prop_diagram_laws(Rng& rng, std::size_t iters) {
  return detail::run_cases("gauss: stack associative/unital, r1/r2 insert-delete round trip", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 4);
      const GaussDiagram a = random_diagram(g, n, 5), b = random_diagram(g, n, 5), c = random_diagram(g, n, 5);
      if (stack(stack(a, b), c) != stack(a, stack(b, c)))
        return "stack not associative";
      if (stack(GaussDiagram(n), a) != a || stack(a, GaussDiagram(n)) != a)
        return "trivial diagram is not neutral for stack";
      for (MoveKind kind : {MoveKind::R1Insert, MoveKind::R2Insert}) {
        const auto specs = enumerate_moves(a, kind);
        const MoveSpec m = g.pick(specs);
        const GaussDiagram b2 = apply_move(a, m);
        // The inserted arrows are the ones absent from `a`; delete them.
        const MoveKind del = kind == MoveKind::R1Insert ? MoveKind::R1Delete : MoveKind::R2Delete;
        bool restored = false;
        for (const MoveSpec& d : enumerate_moves(b2, del))
          if (apply_move(b2, d) == a) {
            restored = true;
            break;
          }
        if (!restored)
          return std::string(move_kind_name(kind)) + " " + format_move_location(m) +
                 " cannot be undone on " + detail::show(a);
      }
      return std::nullopt;
    });
}

// ---- milnor-engine ----

// Fixpoint within n+1 sweeps, every head relation holds, same result for
// reversed strand order.
inline std::optional<std::string> check_coloring(const GaussDiagram& d) {
  const Coloring fwd = color(d, SweepOrder::Forward);
  const Coloring rev = color(d, SweepOrder::Reverse);
  if (fwd.sweeps > d.n() + 1 || rev.sweeps > d.n() + 1)
    return "too many sweeps";
  for (int s = 1; s <= d.n(); ++s) {
    if (fwd.at(s, 0) != Word::generator(d.n(), s))
      return "bottom arc of strand " + std::to_string(s) + " is not its meridian";
    std::size_t k = 0;
    for (const Slot& slot : d.strand(s)) {
      if (!slot.head)
        continue;
      const Arrow& a = d.arrows()[slot.arrow];
      Word over = fwd.at(a.tail.strand, detail::arc_of(d, a.tail));
      if (a.sign < 0)
        over = over.inverse();
      if (!rf_equal(fwd.at(s, k + 1), conjugate(fwd.at(s, k), over)))
        return "head relation fails on strand " + std::to_string(s);
      ++k;
    }
    for (std::size_t arc = 0; arc <= k; ++arc)
      if (!rf_equal(fwd.at(s, arc), rev.at(s, arc)))
        return "coloring depends on sweep order";
  }
  return std::nullopt;
}

inline PropertyReport prop_coloring(Rng& rng, std::size_t iters) {
  return detail::run_cases("engine: coloring fixpoint, head relations, sweep-order independence", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const GaussDiagram d = random_diagram(g, g.uniform(1, 4), 12);
      if (auto f = check_coloring(d))
        return *f + " on " + detail::show(d);
      return std::nullopt;
    });
}

// A random diagram (at most max_arrows arrows) together with a random
// applicable move of a random kind. When the chosen pattern is absent it is
// planted first: an r3 triangle, or an r1/r2 insertion for sv, r1-, r2-, oc.
inline std::pair<GaussDiagram, MoveSpec> random_move_case(Rng& g, int max_n, int max_arrows) {
  const int n = g.uniform(1, max_n);
  const MoveKind kind = kAllMoveKinds[g.uniform(0, 6)];
  GaussDiagram d = random_diagram(g, n, max_arrows - 3);
  if (kind == MoveKind::R3) {
    d = plant_r3(g, d);
  } else if (enumerate_moves(d, kind).empty()) {
    const bool needs_r2 = kind == MoveKind::R2Delete || kind == MoveKind::OC;
    d = apply_move(d, g.pick(enumerate_moves(d, needs_r2 ? MoveKind::R2Insert : MoveKind::R1Insert)));
  }
  return {d, g.pick(enumerate_moves(d, kind))};
}

inline PropertyReport prop_move_invariance(Rng& rng, std::size_t iters) {
  return detail::run_cases("engine: mu table invariant under r1/r2/r3/oc/sv", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      auto [d, m] = random_move_case(g, 4, 12);
      const GaussDiagram moved = apply_move(d, m);
      if (mu_table(moved) != mu_table(d))
        return std::string(move_kind_name(m.kind)) + " " + format_move_location(m) +
               " changes mu on " + detail::show(d);
      return std::nullopt;
    });
}

inline PropertyReport prop_stack_homomorphism(Rng& rng, std::size_t iters) {
  return detail::run_cases("engine: phi(stack) = compose_stack, length-2 mu additive", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 4);
      const GaussDiagram a = random_diagram(g, n, 8), b = random_diagram(g, n, 8);
      const GaussDiagram ab = stack(a, b);
      if (!aut_equal(phi(ab), compose_stack(phi(a), phi(b))))
        return "phi(stack(a,b)) != compose_stack(phi(a), phi(b)) for " + detail::show(a) + " / " + detail::show(b);
      const MuTable ta = mu_table(a), tb = mu_table(b), tab = mu_table(ab);
      for (const auto& [idx, v] : tab)
        if (idx.length() == 2 && v != ta.at(idx) + tb.at(idx))
          return "mu " + idx.to_string() + " not additive under stacking";
      return std::nullopt;
    });
}

inline PropertyReport prop_self_arrows(Rng& rng, std::size_t iters) {
  return detail::run_cases("engine: deleting all self-arrows keeps the mu table", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const GaussDiagram d = random_diagram(g, g.uniform(1, 4), 12);
      if (mu_table(without_self_arrows(d)) != mu_table(d))
        return "self-arrows change mu on " + detail::show(d);
      return std::nullopt;
    });
}

inline PropertyReport prop_realize(Rng& rng, std::size_t iters) {
  return detail::run_cases("engine: realize round trip", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(1, 4);
      const std::vector<Word> targets = random_targets(g, n, 6);
      if (mu_table(realize(targets)) != mu_table_from_reduced(targets))
        return "realized diagram has the wrong mu table";
      return std::nullopt;
    });
}

// ---- spun-obstruction ----

inline PropertyReport prop_spun(Rng& rng, std::size_t iters) {
  return detail::run_cases("spun: gamma Z/2-linear, obstruction matches its definition", rng, iters,
    [](Rng& g) -> std::optional<std::string> {
      const int n = g.uniform(2, 4);
      std::vector<ComponentSurface> comps;
      for (int id = 1; id <= n; ++id)
        comps.push_back({id, g.uniform(0, 3)});
      std::vector<DoubleCircle> circles;
      const int m = g.uniform(0, 6);
      for (int k = 0; k < m; ++k) {
        const int over = g.uniform(1, n);
        int under;
        do
          under = g.uniform(1, n);
        while (under == over);
        Z2Class cls;
        for (int b = 0; b < comps[static_cast<std::size_t>(under - 1)].h1_rank; ++b)
          cls.push_back(g.coin());
        circles.push_back({over, under, cls});
      }
      const SpunSurfaceData data(comps, circles);
      if (!circles.empty()) {
        std::vector<DoubleCircle> doubled = circles;
        doubled.push_back(g.pick(circles));
        doubled.push_back(doubled.back());
        const SpunSurfaceData data2(comps, doubled);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            if (i != j && gamma(data, i, j) != gamma(data2, i, j))
              return "duplicated circle pair changes gamma";
      }
      bool violates = false;
      for (int j = 1; j <= n; ++j) {
        std::vector<Z2Class> nonzero;
        for (int i = 1; i <= n; ++i)
          if (i != j && !is_zero(gamma(data, i, j)))
            nonzero.push_back(gamma(data, i, j));
        for (const Z2Class& c : nonzero)
          violates = violates || c != nonzero.front();
      }
      if (violates != braid_closure_obstruction(data).has_value())
        return "obstruction disagrees with the per-component nonzero count";
      return std::nullopt;
    });
}

// The full suite, in a fixed order.
inline std::vector<PropertyReport> run_all_properties(Rng& rng, std::size_t iters) {
  std::vector<PropertyReport> r;
  r.push_back(prop_word_laws(rng, iters));
  r.push_back(prop_magnus_exact(rng, iters));
  r.push_back(prop_aut_monoid(rng, iters));
  r.push_back(prop_aut_inverse(rng, iters));
  r.push_back(prop_diagram_laws(rng, iters));
  r.push_back(prop_coloring(rng, iters));
  r.push_back(prop_move_invariance(rng, iters));
  r.push_back(prop_stack_homomorphism(rng, iters));
  r.push_back(prop_self_arrows(rng, iters));
  r.push_back(prop_realize(rng, iters));
  r.push_back(prop_spun(rng, iters));
  return r;
}

} // namespace milnor

#endif
