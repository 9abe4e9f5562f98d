#include <gtest/gtest.h>

#include "milnor/text.hpp"

using namespace milnor;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

} // namespace

TEST(Text, Words) {
  EXPECT_EQ(parse_word("e", 2), Word(2));
  EXPECT_EQ(parse_word("x1 x2^-1  x2 x1", 2), (Word(2, {{1, 1}, {1, 1}})));
  EXPECT_EQ(parse_word("x2^3 x1^-2", 2), (Word(2, {{2, 1}, {2, 1}, {2, 1}, {1, -1}, {1, -1}})));
  EXPECT_EQ(format_word(parse_word("x1^-1 x2^-1 x1 x2", 2)), "x1^-1 x2^-1 x1 x2");
  EXPECT_EQ(format_word(Word(3)), "e");
  EXPECT_EQ(code_of([] { parse_word("", 2); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_word("y1", 2); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_word("x1^a", 2); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_word("x3", 2); }), ErrorCode::Word);
}

TEST(Text, Polynomials) {
  const Word c = parse_word("x1^-1 x2^-1 x1 x2", 2);
  EXPECT_EQ(format_poly(expand(c)), "1 + X1X2 - X2X1");
  EXPECT_EQ(format_poly(expand(parse_word("x1^3", 2))), "1 + 3*X1");
  EXPECT_EQ(format_poly(expand(parse_word("x1^-1", 2))), "1 - X1");
  EXPECT_EQ(format_poly(ReducedPoly(2)), "0");
}

TEST(Text, GaussRoundTrip) {
  const std::string text = "gauss v1\nstrands 2\narrow t=1.1 h=2.2 s=+\narrow t=2.1 h=1.2 s=-\n";
  const GaussDiagram d = parse_gauss(text);
  EXPECT_EQ(d.n(), 2);
  EXPECT_EQ(format_gauss(d), text);
  // Positions are canonicalized on input.
  const GaussDiagram e = parse_gauss("# comment\ngauss v1\nstrands 2\narrow t=1.10 h=2.7 s=+  # trailing\n");
  EXPECT_EQ(format_gauss(e), "gauss v1\nstrands 2\narrow t=1.1 h=2.1 s=+\n");
}

TEST(Text, GaussErrors) {
  EXPECT_EQ(code_of([] { parse_gauss(""); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_gauss("gauss v2\nstrands 1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_gauss("gauss v1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_gauss("gauss v1\nstrands 2\narrow t=1.1 h=2.1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_gauss("gauss v1\nstrands 2\narrow t=1.1 h=2.1 s=*\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_gauss("gauss v1\nstrands 2\narrow t=1.1 h=3.1 s=+\n"); }), ErrorCode::Diagram);
  EXPECT_EQ(code_of([] { parse_gauss("gauss v1\nstrands 2\narrow t=1.1 h=1.1 s=+\n"); }), ErrorCode::Diagram);
}

TEST(Text, Targets) {
  const auto t = parse_targets("strands 3\nlambda 3: x1 x2\n");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], Word(3));
  EXPECT_EQ(t[2], parse_word("x1 x2", 3));
  EXPECT_EQ(parse_targets(format_targets(t)), t);
  EXPECT_EQ(code_of([] { parse_targets("strands 2\nlambda 3: e\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_targets("strands 2\nlambda 1: e\nlambda 1: e\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_targets("strands 2\nlambda 1 x2\n"); }), ErrorCode::Parse);
}

TEST(Text, ConjAutRoundTrip) {
  const ConjAut a({parse_word("x2", 2), parse_word("x1^-1", 2)});
  EXPECT_EQ(format_conj_aut(a), "lambda 1: x2\nlambda 2: x1^-1\n");
  EXPECT_TRUE(aut_equal(parse_conj_aut(format_conj_aut(a)), a));
}

TEST(Text, Spun) {
  const SpunSurfaceData d = parse_spun("spun v1\ncomponent 1 rank 0\ncomponent 2 rank 3\n"
                                       "circle over=1 under=2 class=101\ncircle over=2 under=1\n");
  EXPECT_EQ(format_z2(gamma(d, 1, 2)), "101");
  EXPECT_EQ(format_z2(gamma(d, 2, 1)), "");
  EXPECT_EQ(code_of([] { parse_spun("spun v1\ncomponent 1 rank 1\ncircle over=1 under=1 class=1\n"); }),
            ErrorCode::Spun);
  EXPECT_EQ(code_of([] { parse_spun("spun v1\ncomponent 1 rank 1\ncomponent 2 rank 1\n"
                                    "circle over=1 under=2 class=2\n"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_spun("component 1 rank 1\n"); }), ErrorCode::Parse);
}

TEST(Text, MilnorIndices) {
  EXPECT_EQ(parse_milnor_index("213"), (MilnorIndex{2, 1, 3}));
  EXPECT_EQ(code_of([] { parse_milnor_index("112"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { parse_milnor_index("1"); }), ErrorCode::Usage);
  EXPECT_EQ(code_of([] { parse_milnor_index("1a"); }), ErrorCode::Usage);
  EXPECT_EQ(format_mu_table({{{1, 2}, 3}, {{2, 1}, -1}}), "mu 12 = 3\nmu 21 = -1\n");
}

TEST(Text, Files) {
  EXPECT_EQ(code_of([] { read_file("/nonexistent/x.gd"); }), ErrorCode::Io);
  EXPECT_EQ(code_of([] { write_file("/nonexistent/x.gd", "a"); }), ErrorCode::Io);
}
