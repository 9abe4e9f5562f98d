#include <gtest/gtest.h>

#include "milnor/gauss_diagram.hpp"
#include "milnor/random.hpp"

using namespace milnor;

TEST(GaussDiagram, TrivialIsValid) {
  const GaussDiagram d = validate(3, {});
  EXPECT_EQ(d.n(), 3);
  EXPECT_EQ(d.arrow_count(), 0u);
  EXPECT_EQ(d.endpoint_count(2), 0);
}

TEST(GaussDiagram, DuplicatePositionRejected) {
  try {
    validate(2, {{{1, 1}, {2, 1}, 1}, {{1, 1}, {2, 2}, 1}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Diagram);
    EXPECT_NE(std::string(e.what()).find("duplicate position"), std::string::npos);
  }
  // Tail and head of a self-arrow in the same slot.
  EXPECT_THROW(validate(1, {{{1, 2}, {1, 2}, 1}}), Error);
}

TEST(GaussDiagram, StrandOutOfRangeRejected) {
  EXPECT_THROW(validate(2, {{{1, 1}, {3, 1}, 1}}), Error);
  EXPECT_THROW(validate(2, {{{0, 1}, {2, 1}, 1}}), Error);
  EXPECT_THROW(validate(2, {{{1, 1}, {2, 1}, 0}}), Error);
}

TEST(GaussDiagram, PositionsRenumbered) {
  const GaussDiagram d = validate(2, {{{1, 9}, {2, 4}, 1}, {{2, 7}, {1, 5}, -1}});
  EXPECT_EQ(d.arrow(1), (Arrow{{1, 2}, {2, 1}, 1}));
  EXPECT_EQ(d.arrow(2), (Arrow{{2, 2}, {1, 1}, -1}));
  EXPECT_TRUE(d.slot_at({1, 1}).head);
  EXPECT_FALSE(d.slot_at({1, 2}).head);
}

TEST(GaussDiagram, Stack) {
  const GaussDiagram t = validate(2, {});
  const GaussDiagram a = validate(2, {{{1, 1}, {2, 1}, 1}});
  EXPECT_EQ(stack(t, a), a);
  EXPECT_EQ(stack(a, t), a);
  const GaussDiagram aa = stack(a, a);
  EXPECT_EQ(aa.arrows(), (std::vector<Arrow>{{{1, 1}, {2, 1}, 1}, {{1, 2}, {2, 2}, 1}}));
  EXPECT_THROW(stack(a, validate(3, {})), Error);
}

TEST(GaussDiagram, StackAssociative) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const int n = rng.uniform(1, 4);
    const GaussDiagram a = random_diagram(rng, n, 6), b = random_diagram(rng, n, 6),
                       c = random_diagram(rng, n, 6);
    ASSERT_EQ(stack(stack(a, b), c), stack(a, stack(b, c)));
  }
}

TEST(GaussDiagram, SelfArrows) {
  EXPECT_TRUE(self_arrows(validate(2, {})).empty());
  const Arrow self{{1, 1}, {1, 2}, 1};
  EXPECT_EQ(self_arrows(validate(1, {self})), std::vector<Arrow>{self});
  EXPECT_TRUE(self_arrows(validate(2, {{{1, 1}, {2, 1}, 1}})).empty());
  EXPECT_EQ(without_self_arrows(validate(2, {self, {{1, 3}, {2, 1}, 1}})).arrow_count(), 1u);
}
