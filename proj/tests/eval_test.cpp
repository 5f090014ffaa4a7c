#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "phalg/errors.hpp"
#include "phalg/eval.hpp"
#include "phalg/parser.hpp"

using namespace phalg;

namespace {

Word W(const char* s) { return Word::parse(s); }

DefTable examples() {
  DefTable t = loadFile(std::string(PHALG_STDLIB_DIR) + "/examples.fa");
  checkTable(t);
  return t;
}

Word run(const DefTable& t, const std::string& name, std::vector<Word> args) {
  return evalNamed(t, name, args).value;
}

std::vector<Word> upTo(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < (2ULL << n) - 1; ++i) out.push_back(words::fromDyadicIndex(i));
  return out;
}

// grow as a plain loop over the dyadic enumeration.
Word growOracle(const Word& y) {
  std::string v;
  std::string z;
  for (std::uint64_t i = 0; i < words::dyadicIndex(y); ++i) {
    std::string cand = (v + "1").substr(0, z.size());
    bool leq = v.size() < cand.size();
    if (v.size() == cand.size()) {
      leq = true;
      for (std::size_t k = 0; k < v.size(); ++k) leq = leq && v[k] <= cand[k];
    }
    if (leq) v = cand;
    z = words::fromDyadicIndex(i + 1).bits();
  }
  return Word::fromBits(v);
}

}  // namespace

TEST(Eval, Square) {
  DefTable t = examples();
  EXPECT_EQ(run(t, "sq", {W("101")}), W("111111111"));
  for (const Word& x : upTo(6)) EXPECT_EQ(run(t, "sq", {x}).size(), x.size() * x.size());
}

TEST(Eval, GrowMatchesLoop) {
  DefTable t = examples();
  EXPECT_EQ(run(t, "grow", {W("11")}), W("11"));
  for (const Word& y : upTo(6)) EXPECT_EQ(run(t, "grow", {y}), growOracle(y)) << y.display();
}

TEST(Eval, ShrinkStepFrozen) {
  DefTable t = examples();
  EXPECT_EQ(run(t, "shrinkstep", {W("10"), W("1")}), W("1"));
}

TEST(Eval, GrowTrace) {
  DefTable t = examples();
  std::vector<Word> args{W("11")};
  EvalOutcome out = evalNamed(t, "grow", args, {}, true);
  ASSERT_TRUE(out.trace);
  ASSERT_EQ(out.trace->size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ((*out.trace)[i].index, i);
    EXPECT_EQ((*out.trace)[i].y, words::fromDyadicIndex(i));
    if (i > 0) {
      EXPECT_TRUE(words::monLeq((*out.trace)[i - 1].value, (*out.trace)[i].value));
      EXPECT_GE((*out.trace)[i].steps, (*out.trace)[i - 1].steps);
    }
  }
  EXPECT_EQ(out.trace->back().value, W("11"));
}

TEST(Eval, NonRecursiveTraceEmpty) {
  DefTable t = examples();
  std::vector<Word> args{W("1")};
  EvalOutcome out = evalNamed(t, "sq", args, {}, true);
  ASSERT_TRUE(out.trace);
  EXPECT_TRUE(out.trace->empty());
}

TEST(Eval, Budget) {
  DefTable t = examples();
  std::vector<Word> args{W("11")};
  EXPECT_THROW(evalNamed(t, "grow", args, EvalBudget{1}), BudgetExhausted);
}

TEST(Eval, Deterministic) {
  DefTable t = examples();
  std::vector<Word> args{W("101")};
  EvalOutcome a = evalNamed(t, "grow", args);
  EvalOutcome b = evalNamed(t, "grow", args);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.steps, b.steps);
}

TEST(Eval, ArityMismatch) {
  DefTable t = examples();
  std::vector<Word> args{Word()};
  EXPECT_THROW(evalNamed(t, "shrinkstep", args), SortError);
}

TEST(Eval, BoundedSuccessor) {
  DefTable empty;
  std::vector<Word> n1{W("11")}, s1{W("0")};
  EXPECT_EQ(evalSorted(s::succBounded(Bit::One), n1, s1, empty).value, W("01"));
  std::vector<Word> n2{W("1")}, s2{W("00")};
  EXPECT_EQ(evalSorted(s::succBounded(Bit::One), n2, s2, empty).value, W("00"));
}

TEST(Eval, SortedExamples) {
  DefTable t = examples();
  for (const Word& z : upTo(4)) {
    EXPECT_EQ(run(t, "skeep", {z, W("0110")}), W("0110"));
    EXPECT_EQ(run(t, "sident", {z, W("01")}), W("01"));
    for (const Word& w : upTo(3)) {
      EXPECT_EQ(run(t, "smin", {z, w}), Word::ones(std::min(z.size(), w.size())));
      std::size_t nu = words::dyadicIndex(z);
      EXPECT_EQ(run(t, "scount", {z, w}), Word::ones(std::min<std::size_t>(nu, w.size())));
    }
  }
}

TEST(Eval, BoundCompliance) {
  // Every BRN step value is within the bound t.
  DefTable t = loadFile(std::string(PHALG_STDLIB_DIR) + "/truncate.fa");
  for (const Word& c : upTo(4)) {
    for (const Word& x : upTo(4)) {
      std::vector<Word> args{c, x};
      EvalOutcome out = evalNamed(t, "D", args, {}, true);
      for (const TracePoint& p : *out.trace) EXPECT_LE(p.value.size(), x.size());
      EXPECT_EQ(out.value.size(), x.size() - std::min(x.size(), c.size()));
    }
  }
}

TEST(Eval, TPlusRunningMax) {
  // t(y) = Q(y, 11, eps, 1111): lengths 2, 0, 4, 0, 4, 0, 4 at nu = 0..6.
  DefTable t = parseFile(
      "(defu two 0 (comp (s1) (comp (s1) eps)))"
      "(defu four 0 (comp (s1) (comp (s1) two)))"
      "(defu t 1 (comp caseq (proj 1 1) (lift 1 two) (lift 1 eps) (lift 1 four)))");
  checkTable(t);
  const UDef& body = t.resolve("t").unsorted().body;
  std::vector<std::size_t> want{2, 2, 4, 4, 4, 4, 4};
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(tPlus(body, words::fromDyadicIndex(i), {}, t).size(), want[i]) << i;
  }
  // A non-decreasing t is its own majorant.
  UDef id = u::proj(1, 1);
  for (const Word& y : upTo(4)) EXPECT_EQ(tPlus(id, y, {}, t), y);
}
