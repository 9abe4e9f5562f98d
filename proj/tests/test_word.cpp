#include <gtest/gtest.h>

#include "milnor/word.hpp"

using namespace milnor;

namespace {

Word w(int n, std::initializer_list<Letter> letters) { return Word(n, letters); }

} // namespace

TEST(Word, ReduceCancelsAdjacentInverses) {
  EXPECT_TRUE(w(2, {{1, 1}, {1, -1}}).empty());
  EXPECT_EQ(w(2, {{1, 1}, {2, 1}}).letters(), (std::vector<Letter>{{1, 1}, {2, 1}}));
  EXPECT_EQ(w(2, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}).letters(), (std::vector<Letter>{{1, 1}, {1, 1}}));
  // Cascading cancellation.
  EXPECT_TRUE(w(3, {{1, 1}, {2, 1}, {3, -1}, {3, 1}, {2, -1}, {1, -1}}).empty());
}

TEST(Word, ReduceRejectsOutOfRangeGenerators) {
  EXPECT_THROW(w(2, {{3, 1}}), Error);
  EXPECT_THROW(w(2, {{0, 1}}), Error);
  EXPECT_THROW(w(2, {{1, 2}}), Error);
  try {
    w(2, {{3, 1}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Word);
  }
}

TEST(Word, Product) {
  const Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
  EXPECT_EQ(product(x1, Word(2)), x1);
  EXPECT_EQ(product(x1 * x2, x2.inverse()), x1);
  EXPECT_EQ(product(x1, x1), w(2, {{1, 1}, {1, 1}}));
  EXPECT_THROW(product(x1, Word::generator(3, 1)), Error);
}

TEST(Word, Inverse) {
  EXPECT_TRUE(inverse(Word(2)).empty());
  EXPECT_EQ(inverse(w(2, {{1, 1}, {2, 1}})), w(2, {{2, -1}, {1, -1}}));
  EXPECT_EQ(inverse(w(2, {{1, -1}})), Word::generator(2, 1));
}

TEST(Word, Conjugate) {
  const Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
  EXPECT_EQ(conjugate(x1, Word(2)), x1);
  EXPECT_EQ(conjugate(x1, x2), w(2, {{2, -1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(conjugate(x1, x1), x1);
  EXPECT_THROW(conjugate(x1, Word::generator(3, 2)), Error);
}

TEST(Word, KillGenerator) {
  EXPECT_EQ(kill_generator(2, w(2, {{1, 1}, {2, 1}, {1, 1}})), w(2, {{1, 1}, {1, 1}}));
  EXPECT_TRUE(kill_generator(1, Word::generator(2, 1)).empty());
  EXPECT_TRUE(kill_generator(3, w(3, {{1, 1}, {3, 1}, {1, -1}})).empty());
}

TEST(Word, Substitute) {
  const Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
  EXPECT_EQ(substitute(x1, std::vector<Word>{x1, x2}), x1);
  EXPECT_EQ(substitute(x1, std::vector<Word>{conjugate(x1, x2), x2}), w(2, {{2, -1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(substitute(x1 * x2.inverse(), std::vector<Word>{x2, x1}), x2 * x1.inverse());
  EXPECT_THROW(substitute(x1, std::vector<Word>{x1}), Error);
}

TEST(Word, PowerAndCommutator) {
  const Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
  EXPECT_EQ(power(x1, 3).length(), 3u);
  EXPECT_EQ(power(x1, -2), x1.inverse() * x1.inverse());
  EXPECT_TRUE(power(x1, 0).empty());
  EXPECT_EQ(commutator(x1, x2), x1.inverse() * x2.inverse() * x1 * x2);
}
