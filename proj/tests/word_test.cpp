#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "phalg/word.hpp"

using phalg::Word;
namespace w = phalg::words;

namespace {

Word W(const char* s) { return Word::parse(s); }

// All words of length <= n in dyadic order.
std::vector<Word> upTo(std::size_t n) {
  std::vector<Word> out{Word()};
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::uint64_t v = 0; v < (1ULL << len); ++v) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += ((v >> (len - 1 - i)) & 1) ? '1' : '0';
      out.push_back(Word::fromBits(s));
    }
  }
  return out;
}

// Dyadic index via place values: 2^len - 1 + (bits read as binary).
std::uint64_t indexOracle(const Word& x) {
  std::uint64_t v = 0;
  for (char c : x.bits()) v = v * 2 + (c == '1');
  return ((1ULL << x.size()) - 1) + v;
}

// Decoder for dup(u)01v written against the raw string.
std::pair<std::string, std::string> decodeOracle(const std::string& s) {
  std::size_t i = 0;
  std::string u;
  while (i + 1 < s.size()) {
    if (s[i] == s[i + 1]) {
      u += s[i];
      i += 2;
    } else if (s[i] == '0' && s[i + 1] == '1') {
      return {u, s.substr(i + 2)};
    } else {
      break;
    }
  }
  return {"", ""};
}

}  // namespace

TEST(Word, ParseAndDisplay) {
  EXPECT_TRUE(W("eps").empty());
  EXPECT_TRUE(W("").empty());
  EXPECT_EQ(W("eps").display(), "eps");
  EXPECT_EQ(W("101").display(), "101");
  EXPECT_THROW(Word::fromBits("12"), std::invalid_argument);
  EXPECT_NE(W("10"), W("1"));
  EXPECT_NE(W("10"), W("01"));
}

TEST(Word, Successors) {
  EXPECT_EQ(w::succ1(Word()), W("1"));
  EXPECT_EQ(w::succ0(W("1")), W("10"));
  EXPECT_EQ(w::succ1(W("00")), W("001"));
}

TEST(Word, BinPred) {
  EXPECT_EQ(w::binPred(Word()), Word());
  EXPECT_EQ(w::binPred(W("10")), W("1"));
  EXPECT_EQ(w::binPred(W("0")), Word());
}

TEST(Word, NumericSuccessorMatchesIndex) {
  EXPECT_EQ(w::numSucc(Word()), W("0"));
  EXPECT_EQ(w::numSucc(W("1")), W("00"));
  EXPECT_EQ(w::numSucc(W("01")), W("10"));
  for (const Word& x : upTo(8)) {
    Word next = w::numSucc(x);
    EXPECT_EQ(indexOracle(next), indexOracle(x) + 1) << x.display();
    EXPECT_EQ(w::numPred(next), x);
    EXPECT_EQ(w::dyadicIndex(x), indexOracle(x));
    EXPECT_EQ(w::fromDyadicIndex(indexOracle(x)), x);
  }
}

TEST(Word, NumPred) {
  EXPECT_EQ(w::numPred(Word()), Word());
  EXPECT_EQ(w::numPred(W("00")), W("1"));
  EXPECT_EQ(w::numPred(W("0")), Word());
}

TEST(Word, CaseQ) {
  EXPECT_EQ(w::caseQ(Word(), W("1"), W("00"), W("01")), W("1"));
  EXPECT_EQ(w::caseQ(W("10"), W("1"), W("00"), W("01")), W("00"));
  EXPECT_EQ(w::caseQ(W("11"), W("1"), W("00"), W("01")), W("01"));
}

TEST(Word, ConcatAndMul) {
  EXPECT_EQ(w::concat(W("1"), Word()), W("1"));
  EXPECT_EQ(w::concat(W("1"), W("0")), W("10"));
  EXPECT_EQ(w::concat(Word(), W("01")), W("01"));
  EXPECT_EQ(w::wordMul(W("10"), W("1")), W("11"));
  EXPECT_EQ(w::wordMul(W("10"), Word()), Word());
  EXPECT_EQ(w::wordMul(W("10"), W("11")), W("1111"));
  for (const Word& x : upTo(4)) {
    for (const Word& y : upTo(4)) {
      Word m = w::wordMul(x, y);
      EXPECT_EQ(m.size(), x.size() * y.size());
      EXPECT_EQ(m.bits().find('0'), std::string::npos);
    }
  }
}

TEST(Word, Truncate) {
  EXPECT_EQ(w::truncate(W("0110"), W("01")), W("01"));
  EXPECT_EQ(w::truncate(W("0"), W("1111")), W("0"));
  EXPECT_EQ(w::truncate(Word(), W("10")), Word());
  for (const Word& x : upTo(4)) {
    for (const Word& y : upTo(4)) {
      Word t = w::truncate(x, y);
      EXPECT_EQ(t.size(), std::min(x.size(), y.size()));
      EXPECT_TRUE(w::isPrefix(t, x));
    }
  }
}

TEST(Word, Prefix) {
  EXPECT_TRUE(w::isPrefix(Word(), Word()));
  EXPECT_FALSE(w::isPrefix(W("0"), Word()));
  EXPECT_TRUE(w::isPrefix(W("10"), W("101")));
  EXPECT_FALSE(w::isPrefix(W("01"), W("10")));
}

TEST(Word, MonotoneOrder) {
  EXPECT_FALSE(w::monLeq(W("01"), W("10")));
  EXPECT_FALSE(w::monLeq(W("10"), W("01")));
  EXPECT_TRUE(w::monLeq(W("11"), W("000")));
  EXPECT_TRUE(w::monLeq(W("0101"), W("0111")));
  for (const Word& x : upTo(4)) {
    EXPECT_TRUE(w::monLeq(x, x));
    for (const Word& y : upTo(4)) {
      if (w::monLeq(x, y)) {
        EXPECT_TRUE(w::lenLeq(x, y));
      }
      // lenLeq agrees with the tally definition 1 x u prefix of 1 x v.
      EXPECT_EQ(w::lenLeq(x, y),
                w::isPrefix(w::wordMul(W("1"), x), w::wordMul(W("1"), y)));
      if (w::lenLeq(x, y)) {
        EXPECT_TRUE(w::monLeq(x, w::wordMul(W("1"), y)));
      }
    }
  }
}

TEST(Word, LenLeq) {
  EXPECT_TRUE(w::lenLeq(W("00"), W("111")));
  EXPECT_TRUE(w::lenLeq(W("01"), W("10")));
  EXPECT_FALSE(w::lenLeq(W("000"), W("11")));
}

TEST(Word, Pairing) {
  EXPECT_EQ(w::pair(W("1"), W("0")), W("11010"));
  EXPECT_EQ(w::proj0(W("11010")), W("1"));
  EXPECT_EQ(w::proj1(W("11010")), W("0"));
  EXPECT_EQ(w::pair(Word(), Word()), W("01"));
  EXPECT_EQ(w::proj0(W("01")), Word());
  EXPECT_EQ(w::proj0(Word()), Word());
  EXPECT_EQ(w::proj1(Word()), Word());
  for (const Word& u : upTo(4)) {
    for (const Word& v : upTo(4)) {
      Word p = w::pair(u, v);
      EXPECT_EQ(w::proj0(p), u);
      EXPECT_EQ(w::proj1(p), v);
      EXPECT_TRUE(w::monLeq(u, p));
      EXPECT_TRUE(w::monLeq(v, p));
    }
  }
  for (const Word& x : upTo(8)) {
    auto [u, v] = decodeOracle(x.bits());
    EXPECT_EQ(w::proj0(x).bits(), u) << x.display();
    EXPECT_EQ(w::proj1(x).bits(), v) << x.display();
    EXPECT_TRUE(w::monLeq(w::proj0(x), x));
    EXPECT_TRUE(w::monLeq(w::proj1(x), x));
  }
}

TEST(Word, MonotoneSection) {
  auto constEps = w::monotoneSection([](std::span<const Word>, const Word&) { return Word(); });
  EXPECT_EQ(constEps({}, W("1")), W("1"));
  auto append1 = w::monotoneSection(
      [](std::span<const Word>, const Word& z) { return w::succ1(z); });
  EXPECT_EQ(append1({}, W("0")), W("01"));
  auto ident = w::monotoneSection([](std::span<const Word>, const Word& z) { return z; });
  EXPECT_EQ(ident({}, W("10")), W("10"));

  std::mt19937 rng(7);
  auto flip = w::monotoneSection([&](std::span<const Word>, const Word& z) {
    std::string s = z.bits();
    for (char& c : s) c = (rng() & 1) ? '1' : '0';
    return Word::fromBits(s.substr(0, rng() % (s.size() + 2)));
  });
  for (const Word& z : upTo(5)) EXPECT_TRUE(w::monLeq(z, flip({}, z)));
}
