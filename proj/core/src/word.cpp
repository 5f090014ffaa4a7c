#include "phalg/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace phalg {

Word Word::fromBits(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a binary word: '" + std::string(bits) + "'");
    }
  }
  return Word(std::string(bits));
}

Word Word::parse(std::string_view text) {
  if (text == "eps") return Word();
  return fromBits(text);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.display(); }

namespace words {

Word succ(const Word& w, Bit b) {
  Word r = w;
  r.push(b);
  return r;
}

Word binPred(const Word& w) {
  if (w.empty()) return w;
  Word r = w;
  r.pop();
  return r;
}

Word numSucc(const Word& w) {
  // eps' = 0, (x0)' = x1, (x1)' = (x')0
  std::string bits = w.bits();
  std::size_t i = bits.size();
  while (i > 0 && bits[i - 1] == '1') {
    bits[i - 1] = '0';
    --i;
  }
  if (i == 0) {
    bits.insert(bits.begin(), '0');
  } else {
    bits[i - 1] = '1';
  }
  return Word::fromBits(bits);
}

Word numPred(const Word& w) {
  if (w.empty()) return w;
  // (x1)^- = x0, (x0)^- = (x^-)1 with eps0 going to eps.
  std::string bits = w.bits();
  std::size_t i = bits.size();
  while (i > 0 && bits[i - 1] == '0') {
    bits[i - 1] = '1';
    --i;
  }
  if (i == 0) {
    bits.erase(bits.begin());
  } else {
    bits[i - 1] = '0';
  }
  return Word::fromBits(bits);
}

const Word& caseQ(const Word& x, const Word& y, const Word& z0, const Word& z1) {
  if (x.empty()) return y;
  return x.last() == Bit::Zero ? z0 : z1;
}

Word concat(const Word& x, const Word& y) { return Word::fromBits(x.bits() + y.bits()); }

Word wordMul(const Word& x, const Word& y) { return Word::ones(x.size() * y.size()); }

Word truncate(const Word& x, const Word& y) {
  return Word::fromBits(std::string_view(x.bits()).substr(0, std::min(x.size(), y.size())));
}

bool isPrefix(const Word& x, const Word& y) {
  return x.size() <= y.size() && std::equal(x.bits().begin(), x.bits().end(), y.bits().begin());
}

bool monLeq(const Word& w, const Word& v) {
  if (w.size() != v.size()) return w.size() < v.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.bits()[i] > v.bits()[i]) return false;
  }
  return true;
}

bool lenLeq(const Word& u, const Word& v) { return u.size() <= v.size(); }

Word pair(const Word& u, const Word& v) {
  std::string out;
  out.reserve(2 * u.size() + 2 + v.size());
  for (char c : u.bits()) {
    out.push_back(c);
    out.push_back(c);
  }
  out += "01";
  out += v.bits();
  return Word::fromBits(out);
}

namespace {

// Splits a well-formed pair code; returns false on malformed input.
bool unpair(const Word& w, Word& u, Word& v) {
  const std::string& b = w.bits();
  std::string left;
  std::size_t i = 0;
  for (; i + 1 < b.size(); i += 2) {
    if (b[i] == b[i + 1]) {
      left.push_back(b[i]);
    } else if (b[i] == '0') {
      u = Word::fromBits(left);
      v = Word::fromBits(std::string_view(b).substr(i + 2));
      return true;
    } else {
      return false;
    }
  }
  return false;
}

}  // namespace

Word proj0(const Word& w) {
  Word u, v;
  return unpair(w, u, v) ? u : Word();
}

Word proj1(const Word& w) {
  Word u, v;
  return unpair(w, u, v) ? v : Word();
}

std::uint64_t dyadicIndex(const Word& w) {
  // nu(eps) = 0, nu(x0) = 2 nu(x) + 1, nu(x1) = 2 nu(x) + 2
  std::uint64_t n = 0;
  for (char c : w.bits()) n = 2 * n + (c == '0' ? 1 : 2);
  return n;
}

Word fromDyadicIndex(std::uint64_t n) {
  std::string bits;
  while (n > 0) {
    if (n % 2 == 1) {
      bits.push_back('0');
      n = (n - 1) / 2;
    } else {
      bits.push_back('1');
      n = (n - 2) / 2;
    }
  }
  std::reverse(bits.begin(), bits.end());
  return Word::fromBits(bits);
}

StepFn monotoneSection(StepFn h) {
  return [h = std::move(h)](std::span<const Word> args, const Word& z) {
    Word v = h(args, z);
    return monLeq(z, v) ? v : z;
  };
}

}  // namespace words
}  // namespace phalg
