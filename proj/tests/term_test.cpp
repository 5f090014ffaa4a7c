#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "phalg/errors.hpp"
#include "phalg/term.hpp"

using namespace phalg;

namespace {

CombTerm C(Comb c) { return term::constant(c); }
CombTerm N(const char* bits) { return numeral(Word::parse(bits)); }
CombTerm V(const char* name) { return term::var(name); }

std::string nf(const CombTerm& t, std::size_t budget = 100000) {
  return printTerm(reduce(t, EvalBudget{budget}).term);
}

std::vector<Word> upTo(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < (2ULL << n) - 1; ++i) out.push_back(words::fromDyadicIndex(i));
  return out;
}

}  // namespace

TEST(Term, NumeralsAreBijective) {
  EXPECT_EQ(printTerm(N("10")), "#10");
  EXPECT_EQ(N("10")->fun->comb, Comb::S0);
  EXPECT_EQ(N("10")->arg->fun->comb, Comb::S1);
  for (const Word& w : upTo(6)) EXPECT_EQ(denote(numeral(w)), w);
  EXPECT_FALSE(denote(C(Comb::K)).has_value());
  EXPECT_FALSE(denote(term::app(C(Comb::S0), C(Comb::K))).has_value());
}

TEST(Term, SyntaxRoundTrip) {
  for (const char* text : {"(k #1 #e)", "(s k k)", "(cW x #0 (s0 y) #11)", "((k a) b)", "p0"}) {
    CombTerm t = parseTerm(text);
    EXPECT_EQ(parseTerm(printTerm(t))->kind, t->kind);
    EXPECT_EQ(printTerm(parseTerm(printTerm(t))), printTerm(t));
  }
  EXPECT_EQ(printTerm(parseTerm("((k a) b)")), "(k a b)");
  EXPECT_EQ(printTerm(parseTerm("(s0 (s1 eps))")), "#10");
  EXPECT_THROW(parseTerm("(k a"), ParseError);
  EXPECT_THROW(parseTerm("()"), ParseError);
  EXPECT_THROW(parseTerm("#12"), ParseError);
  try {
    parseTerm("(k\n  a))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Reduce, CombinatorsAndPairs) {
  EXPECT_EQ(nf(term::app(C(Comb::K), {V("a"), V("b")})), "a");
  EXPECT_EQ(nf(term::app(C(Comb::S), {V("x"), V("y"), V("z")})), "(x z (y z))");
  CombTerm pr = term::app(C(Comb::P), {V("a"), V("b")});
  EXPECT_EQ(nf(term::app(C(Comb::P0), pr)), "a");
  EXPECT_EQ(nf(term::app(C(Comb::P1), pr)), "b");
  EXPECT_EQ(nf(term::app(C(Comb::P0), V("q"))), "(p0 q)");
}

TEST(Reduce, CaseOnLastBit) {
  auto cw = [](CombTerm w) { return term::app(C(Comb::CW), {w, V("s"), V("r"), V("u")}); };
  EXPECT_EQ(nf(cw(N("eps"))), "s");
  EXPECT_EQ(nf(cw(N("10"))), "r");
  EXPECT_EQ(nf(cw(N("01"))), "u");
  // Not a numeral: stuck, returned as is.
  EXPECT_EQ(nf(cw(V("x"))), "(cW x s r u)");
  // The scrutinee is reduced first.
  EXPECT_EQ(nf(cw(term::app(C(Comb::K), {N("1"), V("junk")}))), "u");
}

TEST(Reduce, WordConstants) {
  EXPECT_EQ(nf(term::app(C(Comb::Star), {N("1"), N("0")})), "#10");
  EXPECT_EQ(nf(term::app(C(Comb::Times), {N("10"), N("11")})), "#1010");
  EXPECT_EQ(nf(term::app(C(Comb::SL), N("eps"))), "#0");
  EXPECT_EQ(nf(term::app(C(Comb::SL), N("11"))), "#000");
  EXPECT_EQ(nf(term::app(C(Comb::PL), N("000"))), "#11");
  EXPECT_EQ(nf(term::app(C(Comb::PL), N("eps"))), "#e");
  EXPECT_EQ(nf(term::app(C(Comb::PW), N("10"))), "#1");
  EXPECT_EQ(nf(term::app(C(Comb::CSub), {N("1"), N("10")})), "#0");
  EXPECT_EQ(nf(term::app(C(Comb::CSub), {N("0"), N("10")})), "#1");
  EXPECT_EQ(nf(term::app(C(Comb::Times), {V("x"), N("1")})), "(times x #1)");
}

TEST(Reduce, CountsFiringsAndStopsAtBudget) {
  Reduction r = reduce(term::app(C(Comb::K), {term::app(C(Comb::K), {N("1"), N("0")}), V("b")}));
  EXPECT_EQ(printTerm(r.term), "#1");
  EXPECT_EQ(r.steps, 2u);

  CombTerm w = lambda({"x"}, term::app(V("x"), V("x")));
  EXPECT_THROW(reduce(term::app(w, w), EvalBudget{1000}), BudgetExhausted);

}

TEST(Reduce, SharedArgumentsReduceOnce) {
  // s k' k' (expensive) with the argument used twice: the product is
  // computed once.
  CombTerm dbl = lambda({"x"}, term::app(C(Comb::Star), {V("x"), V("x")}));
  CombTerm heavy = term::app(C(Comb::Times), {N("1111"), N("1111")});
  Reduction r = reduce(term::app(dbl, heavy));
  EXPECT_EQ(denote(r.term)->size(), 32u);
  EXPECT_LE(r.steps, 6u);
}

TEST(Abstraction, Shapes) {
  EXPECT_EQ(printTerm(bracketAbstract("x", V("x"))), "(s k k)");
  EXPECT_EQ(printTerm(bracketAbstract("x", V("y"))), "(k y)");
  CombTerm flip = lambda({"x", "y"}, term::app(V("y"), V("x")));
  EXPECT_TRUE(isClosed(flip));
  EXPECT_EQ(nf(term::app(flip, {N("1"), C(Comb::SL)})), "#00");
  for (const Word& a : upTo(3)) {
    for (const Word& b : upTo(3)) {
      CombTerm sub = lambda({"x", "y"}, term::app(C(Comb::Star), {V("y"), V("x")}));
      EXPECT_EQ(denote(reduce(term::app(sub, {numeral(a), numeral(b)})).term), words::concat(b, a));
    }
  }
}

TEST(Fixpoint, GuardedLength) {
  // len y = cW y eps (s1 (len (pW y))) (s1 (len (pW y)))
  CombTerm rec = term::app(V("f"), term::app(C(Comb::PW), V("y")));
  CombTerm step = term::app(C(Comb::S1), rec);
  CombTerm body = term::app(C(Comb::CW), {V("y"), N("eps"), step, step});
  CombTerm len = fixpoint(lambda({"f", "y"}, body));
  EXPECT_EQ(nf(term::app(len, N("101"))), "#111");
  for (const Word& w : upTo(5)) {
    EXPECT_EQ(denote(reduce(term::app(len, numeral(w))).term), Word::ones(w.size()));
  }
  // A guard that never recurses.
  CombTerm base = fixpoint(lambda({"f", "y"}, term::app(C(Comb::CW), {V("y"), N("0"), V("y"), V("y")})));
  EXPECT_EQ(nf(term::app(base, N("eps"))), "#0");
  // No guard at all.
  CombTerm loop = fixpoint(lambda({"f", "y"}, term::app(V("f"), V("y"))));
  EXPECT_THROW(reduce(term::app(loop, N("1")), EvalBudget{10000}), BudgetExhausted);
}
