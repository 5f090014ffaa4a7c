#include "phalg/eval.hpp"

#include <unordered_map>
#include <utility>

namespace phalg {

namespace {

class Budgeted {
 public:
  explicit Budgeted(EvalBudget b) : max_(b.maxSteps) {}
  void tick() {
    if (++steps_ > max_) throw BudgetExhausted(max_);
  }
  std::size_t steps() const { return steps_; }

 protected:
  std::size_t max_;
  std::size_t steps_ = 0;
};

std::vector<Word> with(std::span<const Word> front, const Word& a) {
  std::vector<Word> v(front.begin(), front.end());
  v.push_back(a);
  return v;
}

class UEval : public Budgeted {
 public:
  UEval(const DefTable& table, EvalBudget b) : Budgeted(b), table_(table) {}

  std::vector<TracePoint>* trace = nullptr;

  Word eval(const UNode& n, std::span<const Word> a) {
    tick();
    switch (n.op) {
      case UOp::Eps:
        return Word();
      case UOp::Succ:
        return words::succ(a[0], n.bit);
      case UOp::Proj:
        return a[n.index - 1];
      case UOp::CaseQ:
        return words::caseQ(a[0], a[1], a[2], a[3]);
      case UOp::Mul:
        return words::wordMul(a[0], a[1]);
      case UOp::Comp: {
        std::vector<Word> inner;
        inner.reserve(n.kids.size() - 1);
        for (std::size_t i = 1; i < n.kids.size(); ++i) inner.push_back(eval(*n.kids[i], a));
        return eval(*n.kids[0], inner);
      }
      case UOp::BRN:
        return notation(n, a);
      case UOp::BPR:
      case UOp::MBPR:
        return primitive(n, a);
      case UOp::Ref:
        return eval(resolve(n), a);
    }
    return Word();
  }

  const UNode& resolve(const UNode& n) {
    auto it = refs_.find(&n);
    if (it != refs_.end()) return *it->second;
    const Definition& d = table_.resolve(n.name);
    if (d.isSorted()) throw SortError(n.name, "unsorted definition", "sorted definition");
    const UNode* target = d.unsorted().body.get();
    refs_.emplace(&n, target);
    return *target;
  }

 private:
  void record(const Word& y, const Word& v) {
    if (trace) trace->push_back({words::dyadicIndex(y), y, v, steps_});
  }

  // f(eps, x) = g(x); f(yi, x) = h_i(y, x, f(y, x))|_{t(y, x)}
  Word notation(const UNode& n, std::span<const Word> a) {
    auto* tr = std::exchange(trace, nullptr);
    const Word& y = a[0];
    std::span<const Word> xs = a.subspan(1);
    Word value = eval(*n.kids[0], xs);
    Word prefix;
    std::swap(trace, tr);
    record(prefix, value);
    std::swap(trace, tr);
    std::vector<Word> args;
    std::vector<Word> targs;
    for (std::size_t k = 0; k < y.size(); ++k) {
      args.assign({prefix});
      args.insert(args.end(), xs.begin(), xs.end());
      targs = args;
      args.push_back(std::move(value));
      const UNode& h = *n.kids[y[k] == Bit::Zero ? 1 : 2];
      Word v = eval(h, args);
      Word bound = eval(*n.kids[3], targs);
      value = words::truncate(v, bound);
      prefix.push(y[k]);
      std::swap(trace, tr);
      record(prefix, value);
      std::swap(trace, tr);
    }
    return value;
  }

  // f(eps, x) = g(x); f(y', x) = h(y, x, f(y, x))|_{t(y, x)}, with the
  // monotone guard for MBPR.
  Word primitive(const UNode& n, std::span<const Word> a) {
    auto* tr = std::exchange(trace, nullptr);
    const Word& y = a[0];
    std::span<const Word> xs = a.subspan(1);
    Word value = eval(*n.kids[0], xs);
    Word z;
    std::swap(trace, tr);
    record(z, value);
    std::swap(trace, tr);
    std::vector<Word> args;
    std::vector<Word> targs;
    const bool monotone = n.op == UOp::MBPR;
    while (z != y) {
      args.assign({z});
      args.insert(args.end(), xs.begin(), xs.end());
      targs = args;
      args.push_back(value);
      Word v = words::truncate(eval(*n.kids[1], args), eval(*n.kids[2], targs));
      if (!monotone || words::monLeq(value, v)) value = std::move(v);
      z = words::numSucc(z);
      std::swap(trace, tr);
      record(z, value);
      std::swap(trace, tr);
    }
    return value;
  }

  const DefTable& table_;
  std::unordered_map<const UNode*, const UNode*> refs_;
};

class SEval : public Budgeted {
 public:
  SEval(const DefTable& table, EvalBudget b) : Budgeted(b), table_(table) {}

  std::vector<TracePoint>* trace = nullptr;

  Word eval(const SNode& n, std::span<const Word> x, std::span<const Word> y) {
    tick();
    switch (n.op) {
      case SOp::Eps:
        return Word();
      case SOp::Proj:
        return n.index <= x.size() ? x[n.index - 1] : y[n.index - 1 - x.size()];
      case SOp::SuccNormal:
        return words::succ(x[0], n.bit);
      case SOp::SuccBounded:
        return y[0].size() < x[0].size() ? words::succ(y[0], n.bit) : y[0];
      case SOp::BinPred:
        return words::binPred(y[0]);
      case SOp::NumPred:
        return words::numPred(y[0]);
      case SOp::CaseQ:
        return words::caseQ(y[0], y[1], y[2], y[3]);
      case SOp::Mul:
        return words::wordMul(x[0], x[1]);
      case SOp::PC: {
        std::vector<Word> rn;
        std::vector<Word> sf;
        rn.reserve(n.numNormal);
        sf.reserve(n.numSafe());
        for (std::size_t i = 0; i < n.numNormal; ++i) rn.push_back(eval(*n.kids[1 + i], x, {}));
        for (std::size_t i = 0; i < n.numSafe(); ++i) {
          sf.push_back(eval(*n.kids[1 + n.numNormal + i], x, y));
        }
        return eval(*n.kids[0], rn, sf);
      }
      case SOp::PRN:
        return notation(n, x, y);
      case SOp::PPR:
      case SOp::MPPR:
        return primitive(n, x, y);
      case SOp::Ref:
        return eval(resolve(n), x, y);
    }
    return Word();
  }

 private:
  const SNode& resolve(const SNode& n) {
    auto it = refs_.find(&n);
    if (it != refs_.end()) return *it->second;
    const Definition& d = table_.resolve(n.name);
    if (!d.isSorted()) throw SortError(n.name, "sorted definition", "unsorted definition");
    const SNode* target = d.sorted().body.get();
    refs_.emplace(&n, target);
    return *target;
  }

  void record(const Word& z, const Word& v) {
    if (trace) trace->push_back({words::dyadicIndex(z), z, v, steps_});
  }

  // f(eps, x; y) = g(x; y); f(zi, x; y) = h_i(z, x; y, f(z, x; y))
  Word notation(const SNode& n, std::span<const Word> x, std::span<const Word> y) {
    auto* tr = std::exchange(trace, nullptr);
    const Word& z = x[0];
    std::span<const Word> rest = x.subspan(1);
    Word value = eval(*n.kids[0], rest, y);
    Word prefix;
    std::swap(trace, tr);
    record(prefix, value);
    std::swap(trace, tr);
    std::vector<Word> nargs;
    for (std::size_t k = 0; k < z.size(); ++k) {
      nargs.assign({prefix});
      nargs.insert(nargs.end(), rest.begin(), rest.end());
      std::vector<Word> sargs = with(y, value);
      value = eval(*n.kids[z[k] == Bit::Zero ? 1 : 2], nargs, sargs);
      prefix.push(z[k]);
      std::swap(trace, tr);
      record(prefix, value);
      std::swap(trace, tr);
    }
    return value;
  }

  // f(eps, x; y) = g(x; y); f(z', x; y) = h(z, x; y, f(z, x; y)), through the
  // monotone section of h for MPPR.
  Word primitive(const SNode& n, std::span<const Word> x, std::span<const Word> y) {
    auto* tr = std::exchange(trace, nullptr);
    const Word& target = x[0];
    std::span<const Word> rest = x.subspan(1);
    Word value = eval(*n.kids[0], rest, y);
    Word z;
    std::swap(trace, tr);
    record(z, value);
    std::swap(trace, tr);
    const bool monotone = n.op == SOp::MPPR;
    std::vector<Word> nargs;
    while (z != target) {
      nargs.assign({z});
      nargs.insert(nargs.end(), rest.begin(), rest.end());
      std::vector<Word> sargs = with(y, value);
      Word v = eval(*n.kids[1], nargs, sargs);
      if (!monotone || words::monLeq(value, v)) value = std::move(v);
      z = words::numSucc(z);
      std::swap(trace, tr);
      record(z, value);
      std::swap(trace, tr);
    }
    return value;
  }

  const DefTable& table_;
  std::unordered_map<const SNode*, const SNode*> refs_;
};

// Follows Refs so the outermost recursion of a named definition is traced.
template <typename Node>
const Node* unwrapRefs(const Node* n, const DefTable& table);

template <>
const UNode* unwrapRefs(const UNode* n, const DefTable& table) {
  while (n->op == UOp::Ref) n = table.resolve(n->name).unsorted().body.get();
  return n;
}

template <>
const SNode* unwrapRefs(const SNode* n, const DefTable& table) {
  while (n->op == SOp::Ref) n = table.resolve(n->name).sorted().body.get();
  return n;
}

bool isRecursion(UOp op) { return op == UOp::BRN || op == UOp::BPR || op == UOp::MBPR; }
bool isRecursion(SOp op) { return op == SOp::PRN || op == SOp::PPR || op == SOp::MPPR; }

}  // namespace

EvalOutcome evalUnsorted(const UDef& def, std::span<const Word> args, const DefTable& table,
                         EvalBudget budget) {
  UEval ev(table, budget);
  Word v = ev.eval(*def, args);
  return {std::move(v), ev.steps(), std::nullopt};
}

EvalOutcome evalSorted(const SDef& def, std::span<const Word> normals, std::span<const Word> safes,
                       const DefTable& table, EvalBudget budget) {
  SEval ev(table, budget);
  Word v = ev.eval(*def, normals, safes);
  return {std::move(v), ev.steps(), std::nullopt};
}

EvalOutcome evalUnsortedWithTrace(const UDef& def, std::span<const Word> args,
                                  const DefTable& table, EvalBudget budget) {
  UEval ev(table, budget);
  std::vector<TracePoint> trace;
  const UNode* top = unwrapRefs(def.get(), table);
  if (isRecursion(top->op)) ev.trace = &trace;
  Word v = ev.eval(*top, args);
  return {std::move(v), ev.steps(), std::move(trace)};
}

EvalOutcome evalSortedWithTrace(const SDef& def, std::span<const Word> normals,
                                std::span<const Word> safes, const DefTable& table,
                                EvalBudget budget) {
  SEval ev(table, budget);
  std::vector<TracePoint> trace;
  const SNode* top = unwrapRefs(def.get(), table);
  if (isRecursion(top->op)) ev.trace = &trace;
  Word v = ev.eval(*top, normals, safes);
  return {std::move(v), ev.steps(), std::move(trace)};
}

EvalOutcome evalNamed(const DefTable& table, const std::string& name, std::span<const Word> args,
                      EvalBudget budget, bool trace) {
  const Definition& d = table.resolve(name);
  if (d.isSorted()) {
    Sig sig = d.sorted().sig;
    if (args.size() != sig.total()) {
      throw SortError(name, std::to_string(sig.total()) + " argument(s) " + toString(sig),
                      std::to_string(args.size()));
    }
    auto normals = args.first(sig.normal);
    auto safes = args.subspan(sig.normal);
    return trace ? evalSortedWithTrace(d.sorted().body, normals, safes, table, budget)
                 : evalSorted(d.sorted().body, normals, safes, table, budget);
  }
  std::size_t arity = d.unsorted().arity;
  if (args.size() != arity) {
    throw SortError(name, std::to_string(arity) + " argument(s)", std::to_string(args.size()));
  }
  return trace ? evalUnsortedWithTrace(d.unsorted().body, args, table, budget)
               : evalUnsorted(d.unsorted().body, args, table, budget);
}

Word tPlus(const UDef& t, const Word& y, std::span<const Word> xs, const DefTable& table,
           EvalBudget budget) {
  UEval ev(table, budget);
  auto at = [&](const Word& z) {
    std::vector<Word> a{z};
    a.insert(a.end(), xs.begin(), xs.end());
    return ev.eval(*t, a);
  };
  Word z;
  Word best = at(z);
  while (z != y) {
    z = words::numSucc(z);
    Word cur = at(z);
    if (cur.size() >= best.size()) best = std::move(cur);
  }
  return best;
}

}  // namespace phalg
