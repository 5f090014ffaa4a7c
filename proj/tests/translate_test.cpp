#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "phalg/eval.hpp"
#include "phalg/parser.hpp"
#include "phalg/translate.hpp"

using namespace phalg;

namespace {

DefTable load(const std::string& file) {
  DefTable t = loadFile(std::string(PHALG_STDLIB_DIR) + "/" + file);
  checkTable(t);
  return t;
}

std::vector<Word> upTo(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < (2ULL << n) - 1; ++i) out.push_back(words::fromDyadicIndex(i));
  return out;
}

// All argument tuples of the given count with each length <= n.
std::vector<std::vector<Word>> tuples(std::size_t count, std::size_t n) {
  std::vector<std::vector<Word>> out{{}};
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::vector<Word>> next;
    for (const auto& t : out) {
      for (const Word& w : upTo(n)) {
        next.push_back(t);
        next.back().push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t arityOf(const Definition& d) {
  return d.isSorted() ? d.sorted().sig.total() : d.unsorted().arity;
}

void expectSameExtension(const DefTable& a, const DefTable& b, const std::string& name, std::size_t n) {
  std::size_t arity = arityOf(a.resolve(name));
  ASSERT_EQ(arity, arityOf(b.resolve(name))) << name;
  for (const auto& args : tuples(arity, n)) {
    Word x = evalNamed(a, name, args).value;
    Word y = evalNamed(b, name, args).value;
    ASSERT_EQ(x, y) << name << " at first arg " << (args.empty() ? Word() : args[0]);
  }
}

}  // namespace

TEST(SortedToUnsorted, Examples) {
  DefTable src = load("examples.fa");
  DefTable out = sortedToUnsorted(src);
  checkTable(out);
  for (const Definition& d : src) {
    if (!d.isSorted()) continue;
    EXPECT_FALSE(out.resolve(d.name).isSorted());
    expectSameExtension(src, out, d.name, 3);
  }
}

TEST(UnsortedToSorted, Examples) {
  DefTable src = load("examples.fa");
  DefTable out = unsortedToSorted(src);
  checkTable(out);
  for (const Definition& d : src) {
    if (d.isSorted()) continue;
    const SortedEntry& e = out.resolve(d.name).sorted();
    EXPECT_EQ(e.sig, (Sig{d.unsorted().arity, 0}));
    expectSameExtension(src, out, d.name, 3);
  }
}

namespace {

// Definitions whose steps run recursions or products over the recursion
// value, so the translation has to treat it as a safe argument.
const char* kNested = R"fa(
(defu tally 1 (bpr eps (comp (s1) (proj 2 2)) (comp (s1) (proj 1 1))))
(defu grow 1 (mbpr eps (comp (s1) (proj 2 2)) (proj 1 1)))
(defu catr 2 (brn (proj 1 1) (comp (s0) (proj 3 3)) (comp (s1) (proj 3 3))
                  (comp mul (comp (s1) (proj 2 2)) (comp (s1) (comp (s1) (proj 2 1))))))
(defu sqr 1 (comp mul (proj 1 1) (proj 1 1)))

(defu ontally 1 (brn eps (comp tally (proj 2 2)) (comp tally (proj 2 2)) (proj 1 1)))
(defu keepbits 2 (bpr (proj 1 1) (comp (s1) (proj 3 3)) (proj 2 2)))
(defu onkeep 1 (brn (comp (s1) eps) (comp keepbits (proj 2 1) (proj 2 2)) (comp (s0) (proj 2 2)) sqr))
(defu ongrow 1 (brn eps (comp grow (comp (s1) (proj 2 2))) (comp (s0) (proj 2 2)) (proj 1 1)))
(defu squares 1 (brn (comp (s1) eps) (comp mul (proj 2 2) (proj 2 1)) (proj 2 2) sqr))
(defu append 1 (brn eps (comp catr (proj 2 1) (proj 2 2)) (comp (s1) (proj 2 2)) sqr))
(defu pick 2 (bpr (proj 1 1) (comp caseq (proj 3 3) (proj 3 1) (proj 3 2) (comp (s0) (proj 3 3))) (proj 2 2)))
)fa";

DefTable nested() {
  DefTable t = parseFile(kNested);
  checkTable(t);
  return t;
}

}  // namespace

TEST(UnsortedToSorted, SafeRecursionValues) {
  DefTable src = nested();
  DefTable out = unsortedToSorted(src);
  checkTable(out);
  for (const char* name : {"ontally", "onkeep", "ongrow", "squares", "append", "pick"}) {
    SCOPED_TRACE(name);
    expectSameExtension(src, out, name, 3);
  }
  EXPECT_TRUE(out.contains("tally__s_1"));
  EXPECT_TRUE(out.contains("grow__s_1"));
  EXPECT_TRUE(out.contains("catr__s_01"));
}

TEST(UnsortedToSorted, Stdlib) {
  for (const char* file : {"truncate.fa", "concat.fa", "chi_preceq.fa", "pairing.fa"}) {
    SCOPED_TRACE(file);
    DefTable src = load(file);
    DefTable out = unsortedToSorted(src);
    checkTable(out);
    for (const Definition& d : src) expectSameExtension(src, out, d.name, 2);
  }
}

TEST(SortedToUnsorted, BoundedSuccessorExhaustive) {
  DefTable src = parseFile("(defs b0 (1 1) (s0b)) (defs b1 (1 1) (s1b)) (defs pd (0 1) binpred) (defs np (0 1) numpred)");
  DefTable out = sortedToUnsorted(src);
  checkTable(out);
  for (const char* name : {"b0", "b1", "pd", "np"}) expectSameExtension(src, out, name, 5);
}

TEST(Translate, RoundTrip) {
  DefTable src = load("examples.fa");
  DefTable there = unsortedToSorted(sortedToUnsorted(src));
  checkTable(there);
  for (const Definition& d : src) EXPECT_TRUE(there.resolve(d.name).isSorted()) << d.name;
  // Bounded successors inside a PRN step end up behind two layers of clocks;
  // smin is left to the one-way tests.
  for (const char* name : {"sq", "grow", "tally", "sbsucc", "scount", "skeep", "sgrow", "sclimb"}) {
    SCOPED_TRACE(name);
    expectSameExtension(src, there, name, 2);
  }
}

TEST(Translate, MonotoneFreePreserved) {
  DefTable src = load("examples.fa");
  DefTable sorted = unsortedToSorted(src);
  DefTable unsorted = sortedToUnsorted(src);
  for (const Definition& d : src) {
    bool free = isMonotoneFree(src, d.name);
    EXPECT_EQ(isMonotoneFree(sorted, d.name), free) << d.name;
    EXPECT_EQ(isMonotoneFree(unsorted, d.name), free) << d.name;
  }
  EXPECT_FALSE(isMonotoneFree(src, "grow"));
  EXPECT_TRUE(isMonotoneFree(src, "tally"));
  EXPECT_FALSE(isMonotoneFree(src, "sclimb"));
  EXPECT_TRUE(isMonotoneFree(src, "scount"));
}

TEST(Translate, HelpersAreNamedEntries) {
  DefTable out = unsortedToSorted(load("examples.fa"));
  EXPECT_TRUE(out.contains("__truncs"));
  EXPECT_TRUE(out.contains("__ncat"));
  DefTable back = sortedToUnsorted(load("examples.fa"));
  EXPECT_TRUE(back.contains("__cat"));
  EXPECT_TRUE(back.contains("__bsucc1"));
}

TEST(Dependencies, Syntactic) {
  DefTable t = load("examples.fa");
  const UnsortedEntry& climb = t.resolve("climb").unsorted();
  EXPECT_EQ(dependencies(climb.body, 2, t), (std::vector<bool>{true, true}));
  const UnsortedEntry& shrink = t.resolve("shrinkstep").unsorted();
  EXPECT_EQ(dependencies(shrink.body, 2, t), (std::vector<bool>{true, true}));
  UDef firstOnly = u::comp(2, u::succ(Bit::One), {u::proj(2, 1)});
  EXPECT_EQ(dependencies(firstOnly, 2, t), (std::vector<bool>{true, false}));
  EXPECT_EQ(dependencies(u::comp(2, u::eps(), {}), 2, t), (std::vector<bool>{false, false}));
}

namespace {

// max over z <= y (dyadic order) of t(z, x), the later one on ties.
Word tplusOracle(const DefTable& t, const std::string& name, const Word& y, const std::vector<Word>& xs) {
  Word best;
  for (std::uint64_t i = 0; i <= words::dyadicIndex(y); ++i) {
    std::vector<Word> args{words::fromDyadicIndex(i)};
    args.insert(args.end(), xs.begin(), xs.end());
    Word v = evalNamed(t, name, args).value;
    if (i == 0 || v.size() >= best.size()) best = v;
  }
  return best;
}

}  // namespace

TEST(MbprAsBpr, TPlusIsRunningMaximum) {
  DefTable t = parseFile(R"fa(
(defu wave 2 (comp caseq (proj 2 1) (proj 2 2) (comp (s1) (proj 2 1)) (proj 2 1)))
)fa");
  const UnsortedEntry& w = t.resolve("wave").unsorted();
  addTPlus(t, "wave_plus", w.body, 2);
  checkTable(t);
  for (const Word& y : upTo(4)) {
    for (const Word& x : upTo(2)) {
      EXPECT_EQ(evalNamed(t, "wave_plus", std::vector<Word>{y, x}).value, tplusOracle(t, "wave", y, {x}))
          << y << " " << x;
    }
  }
}

TEST(MbprAsBpr, SameExtension) {
  DefTable src = load("examples.fa");
  for (const char* name : {"grow", "shrinkstep", "climb"}) {
    SCOPED_TRACE(name);
    DefTable t = src;
    const UnsortedEntry& e = src.resolve(name).unsorted();
    UDef bpr = mbprAsBpr(e.body, e.arity, t, name);
    EXPECT_EQ(bpr->op, UOp::BPR);
    std::string alt = std::string(name) + "_bpr";
    t.addUnsorted(alt, e.arity, bpr);
    checkTable(t);
    for (const auto& args : tuples(e.arity, e.arity == 1 ? 5 : 3)) {
      EXPECT_EQ(evalNamed(t, alt, args).value, evalNamed(src, name, args).value);
    }
  }
}
