#include "phalg/compile.hpp"

#include <algorithm>

#include "phalg/errors.hpp"
#include "phalg/prelude.hpp"
#include "phalg/translate.hpp"

namespace phalg {

namespace {

CombTerm C(Comb c) { return term::constant(c); }
CombTerm V(const std::string& name) { return term::var(name); }

std::vector<std::string> argNames(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<CombTerm> vars(const std::vector<std::string>& names) {
  std::vector<CombTerm> v;
  for (const auto& n : names) v.push_back(V(n));
  return v;
}

template <typename T>
std::vector<T> cons(T head, std::vector<T> rest) {
  rest.insert(rest.begin(), std::move(head));
  return rest;
}

// (\name. body) value, so that value is reduced at most once.
CombTerm let(const std::string& name, const CombTerm& value, const CombTerm& body) {
  return term::app(bracketAbstract(name, body), value);
}

bool sameProjection(const UDef& h, const UDef& t, std::size_t m) {
  return h->op == UOp::Proj && t->op == UOp::Proj && h->index == t->index && h->index <= m;
}

}  // namespace

Compiler::Compiler(const DefTable& table) : Compiler(table, true) {}

Compiler::Compiler(const DefTable& table, bool truncate) : table_(table), truncate_(truncate) {
  if (truncate_) trunc_ = truncTerm();
}

CompiledFn Compiler::compile(const std::string& name) {
  const Definition& d = table_.resolve(name);
  if (d.isSorted()) throw SortError(name, "unsorted definition", "sorted definition");
  const UnsortedEntry& e = d.unsorted();
  auto it = named_.find(name);
  if (it == named_.end()) it = named_.emplace(name, closed(e.body, e.arity)).first;
  return {name, it->second, e.arity};
}

CombTerm Compiler::closed(const UDef& def, std::size_t arity) {
  auto it = cache_.find(def.get());
  if (it != cache_.end()) return it->second;
  CombTerm t;
  switch (def->op) {
    case UOp::Eps:
      t = arity == 0 ? C(Comb::Eps) : lambda(argNames(arity), C(Comb::Eps));
      break;
    case UOp::Succ:
      t = C(def->bit == Bit::Zero ? Comb::S0 : Comb::S1);
      break;
    case UOp::CaseQ:
      t = C(Comb::CW);
      break;
    case UOp::Mul:
      // 1^{|x||y|} = (1 × x) × y
      t = lambda({"x", "y"}, term::app(C(Comb::Times), {term::app(C(Comb::Times), {numeral(Word::fromBits("1")), V("x")}), V("y")}));
      break;
    case UOp::Ref:
      t = compile(def->name).term;
      break;
    case UOp::BRN:
    case UOp::BPR:
    case UOp::MBPR:
      t = recursion(def, arity);
      break;
    default: {
      std::vector<std::string> names = argNames(arity);
      t = lambda(names, applied(def, vars(names)));
      break;
    }
  }
  cache_.emplace(def.get(), t);
  return t;
}

// f(args) for argument terms that may be open.
CombTerm Compiler::applied(const UDef& def, const std::vector<CombTerm>& args) {
  switch (def->op) {
    case UOp::Proj:
      return args[def->index - 1];
    case UOp::Comp: {
      std::size_t r = def->kids.size() - 1;
      std::vector<CombTerm> inner;
      for (std::size_t i = 1; i <= r; ++i) inner.push_back(applied(def->kids[i], args));
      return term::app(closed(def->kids[0], r), inner);
    }
    default:
      return term::app(closed(def, args.size()), args);
  }
}

CombTerm Compiler::truncated(const CombTerm& value, const CombTerm& bound) {
  return truncate_ ? term::app(trunc_, {value, bound}) : value;
}

// BRN: f y x = cW y (g x) (step_0 (pW y)) (step_1 (pW y)),
//      step_i p = h_i p x (f p x) | t p x.
// BPR: f y x = cW (csub y eps) (g x) (g x) (step (pl y)), where csub y eps is
//      numeral 0 exactly when y = eps, and MBPR keeps the previous value
//      unless it is below the new one.
CombTerm Compiler::recursion(const UDef& def, std::size_t arity) {
  const std::size_t m = arity;
  const std::vector<std::string> xn = argNames(m - 1);
  const std::vector<CombTerm> xs = vars(xn);
  const CombTerm f = V("f");
  const CombTerm y = V("y");
  const CombTerm g = applied(def->kids[0], xs);
  const UDef& t = def->kids.back();

  auto step = [&](const UDef& h, const CombTerm& z) {
    const CombTerm pv = V("pv");
    std::vector<CombTerm> hargs = cons(z, xs);
    hargs.push_back(pv);
    CombTerm v = applied(h, hargs);
    if (!sameProjection(h, t, m)) v = truncated(v, applied(t, cons(z, xs)));
    if (def->op == UOp::MBPR) {
      if (!chi_) chi_ = cPreceqTerm();
      // cW (chi pv nv) pv nv pv
      const CombTerm nv = V("nv");
      v = let("nv", v, term::app(C(Comb::CW), {term::app(chi_, {pv, nv}), pv, nv, pv}));
    }
    return let("pv", term::app(f, cons(z, xs)), v);
  };

  CombTerm body;
  if (def->op == UOp::BRN) {
    CombTerm p = V("p");
    CombTerm pred = term::app(C(Comb::PW), y);
    body = term::app(C(Comb::CW), {y, g, let("p", pred, step(def->kids[1], p)), let("p", pred, step(def->kids[2], p))});
  } else {
    CombTerm z = V("z");
    CombTerm isEps = term::app(C(Comb::CSub), {y, C(Comb::Eps)});
    body = term::app(C(Comb::CW), {isEps, g, g, let("z", term::app(C(Comb::PL), y), step(def->kids[1], z))});
  }
  std::vector<std::string> params = cons(std::string("y"), xn);
  return fixpoint(lambda(cons(std::string("f"), params), body));
}

CompiledFn compile(const DefTable& table, const std::string& name) { return Compiler(table).compile(name); }

const CombTerm& truncTerm() {
  static const CombTerm t = Compiler(helperTable(), false).compile("__trunc").term;
  return t;
}

const CombTerm& cPreceqTerm() {
  static const CombTerm t = Compiler(helperTable()).compile("__chi_preceq").term;
  return t;
}

UDef synthesizeTf(UDef mbpr, std::size_t arity, DefTable& table, const std::string& name) {
  const std::size_t m = arity;
  std::string tplus = name + "__tplus";
  if (!table.contains(tplus)) addTPlus(table, tplus, mbpr->kids.back(), m);
  std::vector<UDef> xs;
  for (std::size_t j = 2; j <= m; ++j) xs.push_back(u::proj(m, j));
  UDef g = u::comp(m, mbpr->kids[0], xs);
  std::vector<UDef> all;
  for (std::size_t j = 1; j <= m; ++j) all.push_back(u::proj(m, j));
  UDef tp = u::comp(u::ref(tplus), all);
  UDef longer = u::comp(u::ref(importHelper(table, "__longer")), {g, tp});
  return u::comp(u::caseQ(), {u::proj(m, 1), g, longer, longer});
}

VerifyReport verifyCompiled(const CompiledFn& fn, const DefTable& table,
                            const std::vector<std::vector<Word>>& samples, EvalBudget budget) {
  VerifyReport report;
  for (const auto& args : samples) {
    ++report.checked;
    Word expected = evalNamed(table, fn.name, args, budget).value;
    std::vector<CombTerm> nums;
    for (const Word& w : args) nums.push_back(numeral(w));
    try {
      Reduction r = reduce(term::app(fn.term, nums), budget);
      report.totalSteps += r.steps;
      report.maxSteps = std::max(report.maxSteps, r.steps);
      if (denote(r.term) != expected) report.mismatches.push_back({args, expected, printTerm(r.term)});
    } catch (const BudgetExhausted& e) {
      report.mismatches.push_back({args, expected, e.what()});
    }
  }
  return report;
}

}  // namespace phalg
