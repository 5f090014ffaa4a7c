#pragma once

// Compilation of unsorted definitions into closed terms of B.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phalg/algebra.hpp"
#include "phalg/eval.hpp"
#include "phalg/term.hpp"

namespace phalg {

struct CompiledFn {
  std::string name;
  CombTerm term;  // closed
  std::size_t arity = 0;
};

// Compiles the entries of one table. Subdefinitions are compiled once and
// shared between the terms that use them.
class Compiler {
 public:
  explicit Compiler(const DefTable& table);

  CompiledFn compile(const std::string& name);
  // The closed term of a subterm of known arity.
  CombTerm closed(const UDef& def, std::size_t arity);

 private:
  Compiler(const DefTable& table, bool truncate);
  CombTerm applied(const UDef& def, const std::vector<CombTerm>& args);
  CombTerm recursion(const UDef& def, std::size_t arity);
  CombTerm truncated(const CombTerm& value, const CombTerm& bound);

  const DefTable& table_;
  bool truncate_;
  CombTerm trunc_;
  CombTerm chi_;
  std::map<const UNode*, CombTerm> cache_;
  std::map<std::string, CombTerm> named_;
  friend const CombTerm& truncTerm();
};

// Compiles the named unsorted entry of `table`.
CompiledFn compile(const DefTable& table, const std::string& name);

// x|y as a term, from the stdlib D/P definitions. Their own recursions never
// exceed their bounds, so they are compiled without truncation.
const CombTerm& truncTerm();

// The compiled stdlib chi_preceq: numeral 0 if w1 ⪯ w2, numeral 1 otherwise.
const CombTerm& cPreceqTerm();

// t_f(y, x) = g(x) for y = eps and the longer of g(x) and t+(y, x)
// otherwise, for an MBPR node of the given arity. Helpers and the t+
// definition are added to `table`.
UDef synthesizeTf(UDef mbpr, std::size_t arity, DefTable& table, const std::string& name);

struct CompiledMismatch {
  std::vector<Word> args;
  Word expected;
  std::string got;  // printed normal form, or the budget message
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<CompiledMismatch> mismatches;
  std::uint64_t totalSteps = 0;
  std::uint64_t maxSteps = 0;
  bool ok() const { return mismatches.empty(); }
};

// Reduces fn.term applied to the numerals of each sample and compares with
// the interpreter's value of `name` in `table`.
VerifyReport verifyCompiled(const CompiledFn& fn, const DefTable& table,
                            const std::vector<std::vector<Word>>& samples, EvalBudget budget = {});

}  // namespace phalg
