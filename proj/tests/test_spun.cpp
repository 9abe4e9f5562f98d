#include <gtest/gtest.h>

#include "milnor/spun.hpp"
#include "milnor/text.hpp"

using namespace milnor;

namespace {

SpunSurfaceData spun3() { return parse_spun(read_file(MILNOR_SAMPLES_DIR "/spun3.sd")); }

} // namespace

TEST(Spun, ThreeComponentSample) {
  const SpunSurfaceData d = spun3();
  EXPECT_EQ(gamma(d, 1, 3), (Z2Class{true, true}));
  EXPECT_EQ(gamma(d, 2, 3), (Z2Class{false, true}));
  EXPECT_EQ(gamma(d, 3, 1), (Z2Class{false, false}));
  const auto w = braid_closure_obstruction(d);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (ObstructionWitness{3, 1, 2}));
}

TEST(Spun, NoCirclesNoObstruction) {
  const SpunSurfaceData d({{1, 2}, {2, 2}}, {});
  EXPECT_TRUE(is_zero(gamma(d, 1, 2)));
  EXPECT_FALSE(braid_closure_obstruction(d));
}

TEST(Spun, EqualCirclesCancel) {
  const SpunSurfaceData d({{1, 1}, {2, 2}, {3, 2}},
                          {{1, 2, {true, false}}, {1, 2, {true, false}}, {3, 2, {false, true}}});
  EXPECT_TRUE(is_zero(gamma(d, 1, 2)));
  EXPECT_FALSE(braid_closure_obstruction(d));
}

TEST(Spun, SameNonzeroValueIsAllowed) {
  const SpunSurfaceData d({{1, 1}, {2, 2}, {3, 2}}, {{1, 2, {true, true}}, {3, 2, {true, true}}});
  EXPECT_FALSE(braid_closure_obstruction(d));
}

TEST(Spun, Errors) {
  const SpunSurfaceData d = spun3();
  EXPECT_THROW(gamma(d, 1, 1), Error);
  EXPECT_THROW(gamma(d, 1, 9), Error);
  EXPECT_THROW(SpunSurfaceData({{1, 1}, {1, 2}}, {}), Error);
  EXPECT_THROW(SpunSurfaceData({{1, 1}, {2, 2}}, {{1, 2, {true}}}), Error);
  EXPECT_THROW(SpunSurfaceData({{1, 1}}, {{1, 1, {true}}}), Error);
  try {
    gamma(d, 1, 9);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Spun);
  }
}
