#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "phalg/bound.hpp"
#include "phalg/parser.hpp"
#include "phalg/prelude.hpp"
#include "phalg/props.hpp"

using namespace phalg;

namespace {

DefTable examples() {
  DefTable t = loadFile(std::string(PHALG_STDLIB_DIR) + "/examples.fa");
  checkTable(t);
  return t;
}

BoundPoly X(std::size_t n, std::size_t i) { return BoundPoly::variable(n, i); }
BoundPoly K(std::size_t n, std::uint64_t c) { return BoundPoly::constant(n, c); }

std::vector<ArgSample> normalPairs(std::size_t n) {
  std::vector<ArgSample> out;
  for (const auto& a : tuplesUpTo(2, n)) out.push_back({a, {}});
  return out;
}

}  // namespace

TEST(BoundPoly, Arithmetic) {
  BoundPoly x = X(2, 0);
  BoundPoly y = X(2, 1);
  BoundPoly q = x * y + x + x + K(2, 1);
  EXPECT_EQ(q.toString(), "x1*x2 + 2*x1 + 1");
  EXPECT_EQ(q.degree(), 2u);
  std::size_t lens[] = {3, 4};
  EXPECT_EQ(q.eval(lens), 19u);
  EXPECT_EQ(BoundPoly(2).toString(), "0");
  EXPECT_TRUE(BoundPoly(2).isZero());
}

TEST(BoundPoly, SubstituteAndRename) {
  BoundPoly x = X(1, 0);
  BoundPoly sq = X(2, 0) * X(2, 1);
  EXPECT_EQ(sq.substitute({x, x}), x * x);
  EXPECT_EQ(X(1, 0).rename(3, {2}), X(3, 2));
}

TEST(BoundPoly, MaxDominatesBoth) {
  BoundPoly a = X(2, 0) * X(2, 0) + K(2, 3);
  BoundPoly b = X(2, 0) * X(2, 1) + X(2, 0) + X(2, 0) + K(2, 1);
  BoundPoly m = a;
  m.maxWith(b);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::size_t lens[] = {i, j};
      EXPECT_GE(m.eval(lens), a.eval(lens));
      EXPECT_GE(m.eval(lens), b.eval(lens));
    }
  }
}

TEST(BoundPoly, EvaluationSaturates) {
  BoundPoly x = X(1, 0);
  BoundPoly q = x * x * x * x;
  std::size_t lens[] = {std::size_t{1} << 20};
  EXPECT_EQ(q.eval(lens), std::numeric_limits<std::uint64_t>::max());
}

TEST(SynthBound, StructuralRules) {
  DefTable t = examples();
  EXPECT_EQ(synthBound(s::mul(), t), X(2, 0) * X(2, 1));
  EXPECT_EQ(synthBound(t.resolve("ssq").sorted().body, t), X(1, 0) * X(1, 0));
  EXPECT_TRUE(synthBound(t.resolve("sident").sorted().body, t).isZero());
  EXPECT_TRUE(synthBound(s::eps(), t).isZero());
}

TEST(CheckBound, MulIsExactAndHalvingFails) {
  DefTable none;
  std::vector<ArgSample> samples = normalPairs(5);
  BoundPoly q = synthBound(s::mul(), none);
  BoundReport r = checkBound(s::mul(), none, q, samples);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, samples.size());
  BoundReport bad = checkBound(s::mul(), none, q.halved(), samples);
  ASSERT_FALSE(bad.ok());
  EXPECT_GT(bad.violations[0].length, bad.violations[0].bound);
}

TEST(CheckBound, EpsWithZero) {
  DefTable none;
  std::vector<ArgSample> samples{{{}, {}}};
  EXPECT_TRUE(checkBound(s::eps(), none, BoundPoly(0), samples).ok());
}

TEST(CheckBound, StdlibSortedDefs) {
  for (const auto& [file, table] : stdlibTables()) {
    for (const Definition& d : table) {
      if (!d.isSorted()) continue;
      const SortedEntry& e = d.sorted();
      std::vector<ArgSample> samples;
      for (const auto& a : tuplesUpTo(e.sig.total(), 3)) {
        samples.push_back({{a.begin(), a.begin() + e.sig.normal}, {a.begin() + e.sig.normal, a.end()}});
      }
      EXPECT_TRUE(checkBound(e.body, table, synthBound(e.body, table), samples).ok()) << file << " " << d.name;
    }
  }
}

TEST(PolyToDef, ExactLength) {
  DefTable cat;
  std::string catName = importHelper(cat, "__cat");
  BoundPoly x = X(1, 0);
  for (const BoundPoly& q : {x * x, x + x + K(1, 1), BoundPoly(1), K(1, 3)}) {
    UDef def = polyToDef(q, 1, catName);
    for (const Word& w : wordsUpTo(4)) {
      std::size_t lens[] = {w.size()};
      std::vector<Word> args{w};
      EXPECT_EQ(evalUnsorted(def, args, cat).value.size(), q.eval(lens)) << q.toString() << " at " << w.display();
    }
  }
}

TEST(PolyToSorted, ExactLength) {
  DefTable cat;
  std::string ncat = importHelper(cat, "__ncat");
  BoundPoly q = X(2, 0) * X(2, 1) + X(2, 1) + K(2, 2);
  SDef def = polyToSorted(q, 2, ncat);
  for (const auto& a : tuplesUpTo(2, 3)) {
    std::size_t lens[] = {a[0].size(), a[1].size()};
    EXPECT_EQ(evalSorted(def, a, {}, cat).value.size(), q.eval(lens));
  }
}

TEST(LengthBound, UnsortedSquare) {
  DefTable t = examples();
  BoundPoly q = lengthBound(t.resolve("sq").unsorted().body, t);
  for (const Word& w : wordsUpTo(5)) {
    std::size_t lens[] = {w.size()};
    std::vector<Word> args{w};
    EXPECT_LE(evalNamed(t, "sq", args).value.size(), q.eval(lens));
  }
}
