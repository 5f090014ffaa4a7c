#include <gtest/gtest.h>

#include <string>

#include "phalg/errors.hpp"
#include "phalg/parser.hpp"

using namespace phalg;

namespace {

const char* kStdlibFiles[] = {"truncate.fa", "concat.fa", "chi_preceq.fa", "pairing.fa",
                              "examples.fa"};

std::string stdlibPath(const char* f) { return std::string(PHALG_STDLIB_DIR) + "/" + f; }

}  // namespace

TEST(Parser, SingleDefinition) {
  DefTable t = parseFile("(defu sq 1 (comp mul (proj 1 1) (proj 1 1)))");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_FALSE(t[0].isSorted());
  EXPECT_EQ(t[0].unsorted().arity, 1u);
  EXPECT_NO_THROW(checkTable(t));
}

TEST(Parser, EmptyFile) {
  EXPECT_TRUE(parseFile("").empty());
  EXPECT_TRUE(parseFile("  ; only a comment\n").empty());
}

TEST(Parser, SortErrorsAreDeferredToChecking) {
  DefTable t = parseFile("(defu bad 1 (proj 2 3))");
  EXPECT_THROW(checkTable(t), SortError);
}

TEST(Parser, DuplicateNameIsParseError) {
  EXPECT_THROW(parseFile("(defu a 0 eps) (defu a 0 eps)"), ParseError);
}

TEST(Parser, WrongSyntaxArityIsParseError) {
  EXPECT_THROW(parseFile("(defu f 1 (brn eps eps eps))"), ParseError);
  EXPECT_THROW(parseFile("(defu f 1 (proj 1))"), ParseError);
  EXPECT_THROW(parseFile("(defs f (1 0) (ppr eps))"), ParseError);
}

TEST(Parser, ErrorPosition) {
  try {
    parseFile("(defu f 1\n   (frob))");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(Parser, RoundTripStdlib) {
  for (const char* f : kStdlibFiles) {
    DefTable t = loadFile(stdlibPath(f));
    EXPECT_NO_THROW(checkTable(t)) << f;
    DefTable again = parseFile(printTable(t));
    EXPECT_TRUE(equal(t, again)) << f;
  }
}

TEST(Parser, RoundTripExplicitShapes) {
  const char* src =
      "(defu c 3 (lift 3 eps))\n"
      "(defu g 1 (mbpr eps (comp (s1) (proj 2 2)) (proj 1 1)))\n"
      "(defs k (1 2) (spc 1 2 eps () ()))\n"
      "(defs m (2 1) (pc (s0b) ((sproj 2 0 1)) ((sproj 2 1 3))))\n";
  DefTable t = parseFile(src);
  EXPECT_NO_THROW(checkTable(t));
  EXPECT_TRUE(equal(t, parseFile(printTable(t))));
  EXPECT_EQ(printDef(t[0]), "(defu c 3 (lift 3 eps))");
}

TEST(Checker, Arities) {
  DefTable empty;
  EXPECT_EQ(checkUnsorted(u::proj(3, 2), empty), 3u);
  EXPECT_EQ(checkUnsorted(u::comp(u::mul(), {u::proj(1, 1), u::proj(1, 1)}), empty), 1u);
  // t must have arity n+1.
  UDef bad = u::brn(u::proj(1, 1), u::proj(3, 3), u::proj(3, 3), u::proj(1, 1));
  EXPECT_THROW(checkUnsorted(bad, empty), SortError);
}

TEST(Checker, Signatures) {
  DefTable empty;
  EXPECT_EQ(checkSorted(s::succBounded(Bit::Zero), empty), (Sig{1, 1}));
  EXPECT_EQ(checkSorted(s::succNormal(Bit::One), empty), (Sig{1, 0}));
  EXPECT_EQ(checkSorted(s::binPred(), empty), (Sig{0, 1}));
  EXPECT_EQ(checkSorted(s::numPred(), empty), (Sig{0, 1}));
  EXPECT_EQ(checkSorted(s::caseQ(), empty), (Sig{0, 4}));
  EXPECT_EQ(checkSorted(s::mul(), empty), (Sig{2, 0}));
  EXPECT_EQ(checkSorted(s::eps(), empty), (Sig{0, 0}));
  SDef sq = s::pc(s::mul(), {s::proj(1, 0, 1), s::proj(1, 0, 1)}, {});
  EXPECT_EQ(checkSorted(sq, empty), (Sig{1, 0}));
  // A normal argument computed from a safe one is rejected.
  SDef leak = s::pc(s::mul(), {s::proj(1, 1, 2), s::proj(1, 1, 1)}, {});
  try {
    checkSorted(leak, empty, "leak");
    FAIL() << "expected SortError";
  } catch (const SortError& e) {
    EXPECT_NE(std::string(e.what()).find("leak/pc.r1"), std::string::npos) << e.what();
  }
}

TEST(Checker, ForwardReferenceRejected) {
  DefTable t = parseFile("(defu a 1 b) (defu b 1 (proj 1 1))");
  EXPECT_THROW(checkTable(t), SortError);
  DefTable u2 = parseFile("(defu a 1 nope)");
  EXPECT_THROW(checkTable(u2), UnknownSymbol);
}

TEST(Checker, Resolve) {
  DefTable t = parseFile("(defu a 0 eps)");
  EXPECT_EQ(t.resolve("a").name, "a");
  EXPECT_THROW(t.resolve("b"), UnknownSymbol);
}
