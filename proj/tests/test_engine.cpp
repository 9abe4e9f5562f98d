#include <gtest/gtest.h>

#include "milnor/engine.hpp"
#include "milnor/random.hpp"
#include "oracle.hpp"

using namespace milnor;

namespace {

Word x(int n, int gen, int exp = 1) { return Word::generator(n, gen, exp); }

const GaussDiagram kSingle = validate(2, {{{1, 1}, {2, 1}, 1}});
// Each strand passes over the other once.
const GaussDiagram kCyclic = validate(2, {{{2, 2}, {1, 1}, 1}, {{1, 2}, {2, 1}, 1}});

} // namespace

TEST(Coloring, TrivialDiagramIsMeridians) {
  const Coloring c = color(validate(3, {}));
  for (int s = 1; s <= 3; ++s) {
    ASSERT_EQ(c.arcs[static_cast<std::size_t>(s - 1)].size(), 1u);
    EXPECT_EQ(c.at(s, 0), x(3, s));
  }
}

TEST(Coloring, SingleArrow) {
  const Coloring c = color(kSingle);
  EXPECT_EQ(c.at(1, 0), x(2, 1));
  EXPECT_EQ(c.at(2, 0), x(2, 2));
  EXPECT_TRUE(rf_equal(c.at(2, 1), conjugate(x(2, 2), x(2, 1))));
  EXPECT_EQ(longitude(kSingle, 1), Word(2));
  EXPECT_EQ(longitude(kSingle, 2), x(2, 1));
}

TEST(Coloring, StackedArrowsMultiply) {
  const GaussDiagram d = validate(2, {{{1, 1}, {2, 1}, 1}, {{1, 2}, {2, 2}, 1}});
  EXPECT_TRUE(rf_equal(longitude(d, 2), power(x(2, 1), 2)));
  EXPECT_EQ(mu(d, {1, 2}), 2);
}

TEST(Coloring, CyclicDiagramNeedsIteration) {
  const Coloring c = color(kCyclic);
  EXPECT_TRUE(rf_equal(c.at(1, 1), conjugate(x(2, 1), x(2, 2))));
  EXPECT_TRUE(rf_equal(c.at(2, 1), conjugate(x(2, 2), x(2, 1))));
  EXPECT_GE(c.sweeps, 2);
  EXPECT_LE(c.sweeps, 3);
  EXPECT_EQ(mu(kCyclic, {1, 2}), 1);
  EXPECT_EQ(mu(kCyclic, {2, 1}), 1);
}

TEST(Coloring, SweepOrderDoesNotMatter) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const GaussDiagram d = random_diagram(rng, rng.uniform(1, 4), 10);
    const Coloring f = color(d, SweepOrder::Forward), r = color(d, SweepOrder::Reverse);
    for (std::size_t s = 0; s < f.arcs.size(); ++s)
      for (std::size_t a = 0; a < f.arcs[s].size(); ++a)
        ASSERT_TRUE(rf_equal(f.arcs[s][a], r.arcs[s][a]));
  }
}

TEST(Phi, TrivialAndOneStrand) {
  EXPECT_TRUE(is_identity(phi(validate(3, {}))));
  const GaussDiagram loop = validate(1, {{{1, 1}, {1, 4}, 1}, {{1, 3}, {1, 2}, -1}});
  EXPECT_TRUE(is_identity(phi(loop)));
  EXPECT_TRUE(mu_table(loop).empty());
}

TEST(Phi, SelfArrowsAreInvisible) {
  const GaussDiagram d = validate(2, {{{1, 1}, {2, 1}, 1}, {{2, 2}, {2, 3}, -1}, {{1, 2}, {1, 3}, 1}});
  EXPECT_TRUE(aut_equal(phi(d), phi(without_self_arrows(d))));
}

TEST(MilnorIndexTest, Validation) {
  EXPECT_THROW(MilnorIndex({1}), Error);
  EXPECT_THROW(MilnorIndex({1, 1}), Error);
  EXPECT_THROW(MilnorIndex({0, 1}), Error);
  EXPECT_THROW(mu(kSingle, {1, 2, 3}), Error);  // entry beyond n
  EXPECT_EQ(MilnorIndex({1, 2, 3}).to_string(), "123");
  EXPECT_EQ(MilnorIndex({10, 2}).to_string(), "10.2");
  EXPECT_TRUE(MilnorIndex({3, 1}) < MilnorIndex({1, 2, 3}));
}

TEST(MilnorIndexTest, TableEnumeratesDistinctSequences) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(static_cast<long long>(milnor_indices(n).size()), n < 2 ? 0 : oracle::count_distinct_sequences(n));
}

TEST(Mu, MatchesOracleExpansion) {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const GaussDiagram d = random_diagram(rng, 3, 8);
    const ConjAut a = phi(d);
    for (const auto& [idx, v] : mu_table(d)) {
      const oracle::Poly p = oracle::reduced_expand(a.normal_conjugator(idx.component()));
      const std::vector<int> m(idx.sequence().begin(), idx.sequence().end() - 1);
      const long long want = p.contains(m) ? p.at(m) : 0;
      ASSERT_EQ(v, want);
    }
  }
}

TEST(Realize, SingleArrow) {
  const std::vector<Word> targets{Word(2), x(2, 1)};
  EXPECT_EQ(realize(targets), kSingle);
}

TEST(Realize, Commutator) {
  const std::vector<Word> targets{Word(3), Word(3), commutator(x(3, 1), x(3, 2))};
  const GaussDiagram d = realize(targets);
  const MuTable t = mu_table(d);
  EXPECT_EQ(t.at({1, 2, 3}), 1);
  EXPECT_EQ(t.at({2, 1, 3}), -1);
  for (const auto& [idx, v] : t)
    if (idx.length() == 2) {
      EXPECT_EQ(v, 0) << idx.to_string();
    }
}

TEST(Realize, Preconditions) {
  EXPECT_THROW(realize(std::vector<Word>{x(2, 1), Word(2)}), Error);
  EXPECT_THROW(realize(std::vector<Word>{Word(3), Word(2)}), Error);
}

TEST(Count, Values) {
  EXPECT_EQ(invariant_count(1).total, 0);
  EXPECT_EQ(invariant_count(2).total, 2);
  EXPECT_EQ(invariant_count(2).rank, 2);
  EXPECT_EQ(invariant_count(3).total, 12);
  EXPECT_EQ(invariant_count(3).rank, 9);
  EXPECT_EQ(invariant_count(4).total, 60);
  EXPECT_EQ(invariant_count(4).rank, 32);
  EXPECT_THROW(invariant_count(0), Error);
}

// Rank counted differently: n * sum over d of C(n-1, d) * (d-1)!, the number
// of basic commutators of weight d+1 in d+1 distinct letters, summed over
// the components.
TEST(Count, AgreesWithIndependentFormulas) {
  for (int n = 2; n <= 7; ++n) {
    long long rank = 0;
    for (int d = 1; d <= n - 1; ++d) {
      long long binom = 1, fact = 1;
      for (int k = 1; k <= d; ++k)
        binom = binom * (n - 1 - k + 1) / k;
      for (int k = 2; k <= d - 1; ++k)
        fact *= k;
      rank += n * binom * fact;
    }
    EXPECT_EQ(invariant_count(n).rank, rank) << n;
    if (n <= 6) {
      EXPECT_EQ(invariant_count(n).total, oracle::count_distinct_sequences(n)) << n;
    }
  }
}

TEST(Equivalence, Examples) {
  const GaussDiagram t = validate(2, {});
  EXPECT_TRUE(lh_equivalent(kSingle, stack(kSingle, t)));
  EXPECT_FALSE(lh_equivalent(kSingle, t));
  EXPECT_FALSE(lh_equivalent(kSingle, kCyclic));
  const GaussDiagram with_self = validate(2, {{{1, 1}, {2, 1}, 1}, {{2, 2}, {2, 3}, 1}});
  EXPECT_TRUE(lh_equivalent(kSingle, with_self));
  EXPECT_THROW(lh_equivalent(kSingle, validate(3, {})), Error);
}
