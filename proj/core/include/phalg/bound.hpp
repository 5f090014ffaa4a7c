#pragma once

// Length bounds: polynomials over argument lengths, the structural bound q_f
// of sorted definitions, and realizations of polynomials as definitions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "phalg/algebra.hpp"
#include "phalg/eval.hpp"

namespace phalg {

// A polynomial with nonnegative integer coefficients over a fixed number of
// length variables. Evaluation saturates at UINT64_MAX.
class BoundPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit BoundPoly(std::size_t numVars = 0) : vars_(numVars) {}
  static BoundPoly constant(std::size_t numVars, std::uint64_t c);
  static BoundPoly variable(std::size_t numVars, std::size_t i);

  std::size_t numVars() const { return vars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }
  unsigned degree() const;

  BoundPoly& operator+=(const BoundPoly& o);
  friend BoundPoly operator+(BoundPoly a, const BoundPoly& b) { return a += b; }
  friend BoundPoly operator*(const BoundPoly& a, const BoundPoly& b);
  // Coefficient-wise maximum; dominates both operands pointwise.
  BoundPoly& maxWith(const BoundPoly& o);
  friend bool operator==(const BoundPoly&, const BoundPoly&) = default;

  // Replaces variable i by vals[i]; all vals must share one variable count.
  BoundPoly substitute(const std::vector<BoundPoly>& vals) const;
  // Re-indexes into `numVars` variables, old variable i becoming map[i].
  BoundPoly rename(std::size_t numVars, const std::vector<std::size_t>& map) const;
  // Each coefficient halved, rounding down (a falsification control).
  BoundPoly halved() const;

  std::uint64_t eval(std::span<const std::size_t> lengths) const;

  // e.g. "x1*x2 + 2*x1 + 1"; "0" for the zero polynomial.
  std::string toString() const;

 private:
  void addTerm(const Exponents& e, std::uint64_t c);
  std::size_t vars_;
  std::map<Exponents, std::uint64_t> terms_;
};

// q_f over the normal arguments of a checked sorted definition:
// |f(x;y)| <= max(q_f(|x|), max_i |y_i|).
BoundPoly synthBound(const SDef& def, const DefTable& table);

// q over all arguments of a checked unsorted definition: |f(x)| <= q(|x|).
BoundPoly lengthBound(const UDef& def, const DefTable& table);

// The same syntheses for subterms of known shape, caching named entries.
class SortedBounds {
 public:
  explicit SortedBounds(const DefTable& table) : table_(table) {}
  BoundPoly of(const SDef& def, Sig sig);

 private:
  const DefTable& table_;
  std::map<std::string, BoundPoly> cache_;
};

class LengthBounds {
 public:
  explicit LengthBounds(const DefTable& table) : table_(table) {}
  BoundPoly of(const UDef& def, std::size_t arity);

 private:
  const DefTable& table_;
  std::map<std::string, BoundPoly> cache_;
};

struct BoundViolation {
  std::vector<Word> normals;
  std::vector<Word> safes;
  std::size_t length;
  std::uint64_t bound;
};

struct BoundReport {
  std::size_t checked = 0;
  std::vector<BoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct ArgSample {
  std::vector<Word> normals;
  std::vector<Word> safes;
};

BoundReport checkBound(const SDef& def, const DefTable& table, const BoundPoly& q,
                       std::span<const ArgSample> samples, EvalBudget budget = {});

// A BRN-free unsorted definition of the given arity computing a word of
// length exactly q(|x|). Sums use the concatenation helper `catName`
// (arity 2), which must be present in the table the result is used with.
UDef polyToDef(const BoundPoly& q, std::size_t arity, const std::string& catName);

// The sorted analogue with signature (k;0): the result is a normal value of
// length exactly q(|x|). `ncatName` must name a (2;0) concatenation.
SDef polyToSorted(const BoundPoly& q, std::size_t k, const std::string& ncatName);

}  // namespace phalg
