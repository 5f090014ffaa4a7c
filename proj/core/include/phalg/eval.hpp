#pragma once

// Big-step interpreters for both algebras. Every AST-node application costs
// one step; evaluation aborts with BudgetExhausted once the budget is spent.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phalg/algebra.hpp"
#include "phalg/word.hpp"

namespace phalg {

inline constexpr std::size_t kDefaultMaxSteps = 10'000'000;

struct EvalBudget {
  std::size_t maxSteps = kDefaultMaxSteps;
};

// One point of the outermost recursion chain.
struct TracePoint {
  std::uint64_t index;  // dyadic index of the recursion argument
  Word y;
  Word value;
  std::size_t steps;  // cumulative
};

struct EvalOutcome {
  Word value;
  std::size_t steps = 0;
  std::optional<std::vector<TracePoint>> trace;
};

EvalOutcome evalUnsorted(const UDef& def, std::span<const Word> args, const DefTable& table,
                         EvalBudget budget = {});
EvalOutcome evalSorted(const SDef& def, std::span<const Word> normals, std::span<const Word> safes,
                       const DefTable& table, EvalBudget budget = {});

// As above, recording the outermost recursion chain (empty when the
// definition is not a recursion).
EvalOutcome evalUnsortedWithTrace(const UDef& def, std::span<const Word> args,
                                  const DefTable& table, EvalBudget budget = {});
EvalOutcome evalSortedWithTrace(const SDef& def, std::span<const Word> normals,
                                std::span<const Word> safes, const DefTable& table,
                                EvalBudget budget = {});

// Evaluates a named table entry. For sorted entries the first sig.normal
// arguments are normal, the rest safe. Throws SortError on an argument
// count mismatch.
EvalOutcome evalNamed(const DefTable& table, const std::string& name, std::span<const Word> args,
                      EvalBudget budget = {}, bool trace = false);

// The length-non-decreasing majorant t+ of t: t+(eps) = t(eps), and t+(y')
// is whichever of t(y'), t+(y) is longer, ties going to t(y').
Word tPlus(const UDef& t, const Word& y, std::span<const Word> xs, const DefTable& table,
           EvalBudget budget = {});

}  // namespace phalg
