#pragma once

// Combinator terms of the applicative theory B and their reduction.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phalg/eval.hpp"
#include "phalg/word.hpp"

namespace phalg {

enum class Comb : std::uint8_t {
  K, S, P, P0, P1, CW, Eps, S0, S1, PW, SL, PL, CSub, Star, Times
};

// Names as written in term syntax: k s p p0 p1 cW eps s0 s1 pW sl pl csub
// star times.
std::string_view combName(Comb c);
std::optional<Comb> combFromName(std::string_view name);

struct TermNode;
// Immutable; subterms may be shared.
using CombTerm = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Kind : std::uint8_t { Const, Var, App };
  Kind kind;
  Comb comb = Comb::K;
  std::string name;
  CombTerm fun;
  CombTerm arg;
};

namespace term {
CombTerm constant(Comb c);
CombTerm var(std::string name);
CombTerm app(CombTerm f, CombTerm a);
// f a1 ... an
CombTerm app(CombTerm f, std::initializer_list<CombTerm> args);
CombTerm app(CombTerm f, const std::vector<CombTerm>& args);
}  // namespace term

// eps for the empty word, s_i applied to numeral(x) for xi.
CombTerm numeral(const Word& w);
// nullopt unless t is a numeral.
std::optional<Word> denote(const CombTerm& t);

// `(t u v)` is ((t u) v); numerals print as #101, #e.
std::string printTerm(const CombTerm& t);
CombTerm parseTerm(std::string_view text);  // ParseError

bool occursIn(const std::string& var, const CombTerm& t);
bool isClosed(const CombTerm& t);
// Number of nodes counted as a tree.
std::uint64_t termSize(const CombTerm& t);

struct Reduction {
  CombTerm term;
  std::uint64_t steps = 0;  // rule firings
};

// Leftmost-outermost reduction to normal form with shared subterms. Rules
// guarded by W(x) fire only on numerals; terms without a redex are returned
// as they are. Throws BudgetExhausted when firings exceed the budget.
Reduction reduce(const CombTerm& t, EvalBudget budget = {});

// A with (A t) reducing like body[var := t]; k-rule for absent variables and
// the eta shortcut [x](M x) = M.
CombTerm bracketAbstract(const std::string& var, const CombTerm& body);
// [x1]...[xn] body
CombTerm lambda(const std::vector<std::string>& vars, const CombTerm& body);

// W W with W = [x] f (x x); reduces as Y f x -> f (Y f) x.
CombTerm fixpoint(const CombTerm& f);

}  // namespace phalg
