#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace phalg {

enum class Bit : std::uint8_t { Zero = 0, One = 1 };

// A finite binary word. Bits are stored leftmost first; successors append on
// the right, so S_i(x) = xi.
class Word {
 public:
  Word() = default;

  // Accepts a string over {0,1}; throws std::invalid_argument otherwise.
  static Word fromBits(std::string_view bits);
  // Like fromBits, but also accepts "eps" for the empty word.
  static Word parse(std::string_view text);
  static Word ones(std::size_t n) { return Word(std::string(n, '1')); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i] == '1' ? Bit::One : Bit::Zero; }
  Bit last() const { return (*this)[size() - 1]; }

  const std::string& bits() const { return bits_; }
  // "" for the empty word.
  const std::string& str() const { return bits_; }
  // "eps" for the empty word, the bits otherwise.
  std::string display() const { return bits_.empty() ? "eps" : bits_; }

  void push(Bit b) { bits_.push_back(b == Bit::One ? '1' : '0'); }
  void pop() { bits_.pop_back(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

// Writes Word::display().
std::ostream& operator<<(std::ostream& os, const Word& w);

namespace words {

Word succ(const Word& w, Bit b);
inline Word succ0(const Word& w) { return succ(w, Bit::Zero); }
inline Word succ1(const Word& w) { return succ(w, Bit::One); }

// Binary predecessor P: drops the last bit, P(eps) = eps.
Word binPred(const Word& w);

// Numeric (dyadic) successor: eps, 0, 1, 00, 01, 10, 11, 000, ...
Word numSucc(const Word& w);
// Inverse of numSucc on nonempty words; numPred(eps) = eps.
Word numPred(const Word& w);

// Q(x, y, z0, z1): y if x = eps, otherwise z_i for the last bit i of x.
const Word& caseQ(const Word& x, const Word& y, const Word& z0, const Word& z1);

Word concat(const Word& x, const Word& y);
// 1^{|x|*|y|}
Word wordMul(const Word& x, const Word& y);
// x|_y: the first min(|x|,|y|) bits of x.
Word truncate(const Word& x, const Word& y);

bool isPrefix(const Word& x, const Word& y);
// The monotone order: |w| < |v|, or equal length and w_i <= v_i everywhere.
bool monLeq(const Word& w, const Word& v);
// Length comparison |u| <= |v|.
bool lenLeq(const Word& u, const Word& v);

// Self-delimiting pairing dup(u) . "01" . v.
Word pair(const Word& u, const Word& v);
// Projections; malformed input projects to eps.
Word proj0(const Word& w);
Word proj1(const Word& w);

// Position of w in the dyadic enumeration (eps has index 0). Requires |w| < 64.
std::uint64_t dyadicIndex(const Word& w);
Word fromDyadicIndex(std::uint64_t n);

// A step function h(args, z); z is the distinguished last argument.
using StepFn = std::function<Word(std::span<const Word> args, const Word& z)>;

// h^m: h(args, z) when z ⪯ h(args, z), z otherwise.
StepFn monotoneSection(StepFn h);

}  // namespace words
}  // namespace phalg

template <>
struct std::hash<phalg::Word> {
  std::size_t operator()(const phalg::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bits());
  }
};
