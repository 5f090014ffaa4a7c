#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "phalg/eval.hpp"
#include "phalg/parser.hpp"
#include "phalg/prelude.hpp"

using namespace phalg;

namespace {

std::vector<Word> upTo(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < (2ULL << n) - 1; ++i) out.push_back(words::fromDyadicIndex(i));
  return out;
}

Word sorted(const char* name, std::vector<Word> normals, std::vector<Word> safes) {
  const DefTable& h = helperTable();
  return evalSorted(h.resolve(name).sorted().body, normals, safes, h).value;
}

Word unsorted(const char* name, std::vector<Word> args) {
  const DefTable& h = helperTable();
  return evalUnsorted(h.resolve(name).unsorted().body, args, h).value;
}

Word dropLast(const Word& x, std::size_t n) {
  return Word::fromBits(x.bits().substr(0, x.size() - std::min(n, x.size())));
}

}  // namespace

TEST(Prelude, EmbeddedSourcesMatchFiles) {
  for (const StdlibSource& s : stdlibSources()) {
    std::ifstream in(std::string(PHALG_STDLIB_DIR) + "/" + std::string(s.file));
    ASSERT_TRUE(in) << s.file;
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), s.text) << s.file;
  }
}

TEST(Prelude, HelperTableChecks) {
  EXPECT_NO_THROW(checkTable(helperTable()));
  EXPECT_TRUE(helperTable().contains("__trunc"));
  EXPECT_TRUE(helperTable().contains("__chi_preceq"));
}

TEST(Prelude, ImportPullsDependencies) {
  DefTable out;
  importHelper(out, "__truncs");
  EXPECT_TRUE(out.contains("__dsafe"));
  EXPECT_TRUE(out.contains("__drops"));
  EXPECT_EQ(out[out.size() - 1].name, "__truncs");
  EXPECT_NO_THROW(checkTable(out));
  std::size_t n = out.size();
  importHelper(out, "__drops");
  EXPECT_EQ(out.size(), n);
}

TEST(Prelude, UnsortedHelpers) {
  for (const Word& z : upTo(4)) {
    EXPECT_EQ(unsorted("__npred", {z}), words::numPred(z));
    for (const Word& x : upTo(4)) {
      Word want0 = x.size() < z.size() ? words::succ0(x) : x;
      Word want1 = x.size() < z.size() ? words::succ1(x) : x;
      EXPECT_EQ(unsorted("__bsucc0", {z, x}), want0);
      EXPECT_EQ(unsorted("__bsucc1", {z, x}), want1);
    }
  }
}

TEST(Prelude, SortedWordHelpers) {
  const Word w = Word::ones(5);
  for (const Word& x : upTo(4)) {
    for (const Word& y : upTo(4)) {
      EXPECT_EQ(sorted("__ncat", {x, y}, {}), words::concat(x, y));
      EXPECT_EQ(sorted("__dsafe", {x}, {y}), dropLast(y, x.size()));
      EXPECT_EQ(sorted("__dn", {x, y}, {}), dropLast(y, x.size()));
      EXPECT_EQ(sorted("__drops", {w}, {x, y}), dropLast(y, x.size()));
      EXPECT_EQ(sorted("__truncs", {w}, {x, y}), words::truncate(x, y));
      EXPECT_EQ(sorted("__tcat", {Word::ones(8)}, {x, y}), words::concat(x, Word::ones(y.size())));
      EXPECT_EQ(sorted("__muls", {Word::ones(16)}, {x, y}), words::wordMul(x, y));
      Word lt = words::dyadicIndex(x) < words::dyadicIndex(y) ? Word::ones(1) : Word();
      EXPECT_EQ(sorted("__ltnu", {w}, {x, y}), lt) << x.display() << " " << y.display();
    }
  }
}
