#pragma once

// Invariant suites over the stdlib, shared by the CLI and the tests.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phalg/eval.hpp"
#include "phalg/term.hpp"

namespace phalg {

struct PropConfig {
  std::size_t maxLen = 4;    // exhaustive inputs have lengths <= maxLen
  std::size_t samples = 50;  // random cases per property where sampled
  std::uint64_t seed = 1;
  EvalBudget budget;
};

struct PropResult {
  std::string suite;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string firstFailure;
  bool ok() const { return failures == 0; }
};

// words, eval, translate, engine, compiler
const std::vector<std::string>& propSuites();
// Throws Error for an unknown suite.
std::vector<PropResult> runSuite(std::string_view suite, const PropConfig& cfg);

// Instantiates axiom `number` (1..26) of the applicative theory with random
// numerals and compares the normal forms of both sides.
PropResult checkAxiom(int number, std::size_t instances, std::uint64_t seed, EvalBudget budget = {});

// Recursive terms built from s0, s1, pW and cW alone that compute csub, star
// and times by unfolding their axioms.
CombTerm unfoldedCSub();
CombTerm unfoldedStar();
CombTerm unfoldedTimes();

// The stdlib files as checked tables, in the order of stdlibSources().
std::vector<std::pair<std::string, DefTable>> stdlibTables();

// All words of length <= n in dyadic order.
std::vector<Word> wordsUpTo(std::size_t n);
// All tuples of `count` words with lengths <= n.
std::vector<std::vector<Word>> tuplesUpTo(std::size_t count, std::size_t n);

}  // namespace phalg
