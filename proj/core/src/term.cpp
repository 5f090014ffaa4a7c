#include "phalg/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "phalg/errors.hpp"

namespace phalg {

namespace {

constexpr std::array<std::string_view, 15> kNames = {
    "k", "s", "p", "p0", "p1", "cW", "eps", "s0", "s1", "pW", "sl", "pl", "csub", "star", "times"};

}  // namespace

std::string_view combName(Comb c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<Comb> combFromName(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Comb>(i);
  }
  return std::nullopt;
}

namespace term {

CombTerm constant(Comb c) {
  static const auto table = [] {
    std::array<CombTerm, kNames.size()> t;
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = std::make_shared<const TermNode>(TermNode{TermNode::Kind::Const, static_cast<Comb>(i), {}, {}, {}});
    }
    return t;
  }();
  return table[static_cast<std::size_t>(c)];
}

CombTerm var(std::string name) {
  return std::make_shared<const TermNode>(TermNode{TermNode::Kind::Var, Comb::K, std::move(name), {}, {}});
}

CombTerm app(CombTerm f, CombTerm a) {
  return std::make_shared<const TermNode>(TermNode{TermNode::Kind::App, Comb::K, {}, std::move(f), std::move(a)});
}

CombTerm app(CombTerm f, std::initializer_list<CombTerm> args) {
  for (const CombTerm& a : args) f = app(std::move(f), a);
  return f;
}

CombTerm app(CombTerm f, const std::vector<CombTerm>& args) {
  for (const CombTerm& a : args) f = app(std::move(f), a);
  return f;
}

}  // namespace term

CombTerm numeral(const Word& w) {
  CombTerm t = term::constant(Comb::Eps);
  for (std::size_t i = 0; i < w.size(); ++i) {
    t = term::app(term::constant(w[i] == Bit::Zero ? Comb::S0 : Comb::S1), t);
  }
  return t;
}

std::optional<Word> denote(const CombTerm& t) {
  std::string rev;
  const TermNode* n = t.get();
  while (n->kind == TermNode::Kind::App) {
    const TermNode* f = n->fun.get();
    if (f->kind != TermNode::Kind::Const || (f->comb != Comb::S0 && f->comb != Comb::S1)) return std::nullopt;
    rev.push_back(f->comb == Comb::S0 ? '0' : '1');
    n = n->arg.get();
  }
  if (n->kind != TermNode::Kind::Const || n->comb != Comb::Eps) return std::nullopt;
  std::reverse(rev.begin(), rev.end());
  return Word::fromBits(rev);
}

namespace {

void print(const CombTerm& t, std::string& out) {
  if (auto w = denote(t); w && !w->empty()) {
    out += '#';
    out += w->bits();
    return;
  }
  switch (t->kind) {
    case TermNode::Kind::Const:
      out += t->comb == Comb::Eps ? "#e" : std::string(combName(t->comb));
      return;
    case TermNode::Kind::Var:
      out += t->name;
      return;
    case TermNode::Kind::App: {
      std::vector<const CombTerm*> args;
      const CombTerm* head = &t;
      while ((*head)->kind == TermNode::Kind::App) {
        args.push_back(&(*head)->arg);
        head = &(*head)->fun;
      }
      out += '(';
      print(*head, out);
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        out += ' ';
        print(**it, out);
      }
      out += ')';
      return;
    }
  }
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  CombTerm parseAll() {
    CombTerm t = parse();
    skip();
    if (pos_ < text_.size()) fail("unexpected input after term");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  CombTerm parse() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] == '(') {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') fail("empty application");
      CombTerm t = parse();
      for (;;) {
        skip();
        if (pos_ >= text_.size()) fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return t;
        }
        t = term::app(t, parse());
      }
    }
    std::size_t start = pos_;
    std::string_view a = atom();
    if (a.front() == '#') {
      if (a == "#e") return numeral(Word());
      try {
        return numeral(Word::fromBits(a.substr(1)));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("bad numeral '" + std::string(a) + "'");
      }
    }
    if (auto c = combFromName(a)) return term::constant(*c);
    for (char c : a) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') {
        pos_ = start;
        fail("bad identifier '" + std::string(a) + "'");
      }
    }
    return term::var(std::string(a));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string printTerm(const CombTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

CombTerm parseTerm(std::string_view text) { return TermParser(text).parseAll(); }

bool occursIn(const std::string& var, const CombTerm& t) {
  std::unordered_set<const TermNode*> seen;
  std::vector<const TermNode*> todo{t.get()};
  while (!todo.empty()) {
    const TermNode* n = todo.back();
    todo.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == TermNode::Kind::Var && n->name == var) return true;
    if (n->kind == TermNode::Kind::App) {
      todo.push_back(n->fun.get());
      todo.push_back(n->arg.get());
    }
  }
  return false;
}

bool isClosed(const CombTerm& t) {
  std::unordered_set<const TermNode*> seen;
  std::vector<const TermNode*> todo{t.get()};
  while (!todo.empty()) {
    const TermNode* n = todo.back();
    todo.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == TermNode::Kind::Var) return false;
    if (n->kind == TermNode::Kind::App) {
      todo.push_back(n->fun.get());
      todo.push_back(n->arg.get());
    }
  }
  return true;
}

std::uint64_t termSize(const CombTerm& t) {
  std::unordered_map<const TermNode*, std::uint64_t> memo;
  auto go = [&](auto& self, const TermNode* n) -> std::uint64_t {
    if (n->kind != TermNode::Kind::App) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::uint64_t s = 1 + self(self, n->fun.get()) + self(self, n->arg.get());
    memo.emplace(n, s);
    return s;
  };
  return go(go, t.get());
}

namespace {

// Mutable term graph. A fired redex is overwritten by an indirection to its
// result, so every other reference to it sees the reduced value.
class Graph {
 public:
  explicit Graph(EvalBudget budget) : max_(budget.maxSteps) {}

  std::uint32_t load(const CombTerm& t) {
    auto it = loaded_.find(t.get());
    if (it != loaded_.end()) return it->second;
    std::uint32_t id = 0;
    switch (t->kind) {
      case TermNode::Kind::Const:
        id = add({Tag::Const, t->comb, 0, 0});
        break;
      case TermNode::Kind::Var:
        vars_.push_back(t->name);
        id = add({Tag::Var, Comb::K, static_cast<std::uint32_t>(vars_.size() - 1), 0});
        break;
      case TermNode::Kind::App: {
        std::uint32_t f = load(t->fun);
        std::uint32_t a = load(t->arg);
        id = add({Tag::App, Comb::K, f, a});
        break;
      }
    }
    loaded_.emplace(t.get(), id);
    return id;
  }

  CombTerm read(std::uint32_t id) {
    id = follow(id);
    auto it = read_.find(id);
    if (it != read_.end()) return it->second;
    CombTerm t;
    const Node n = nodes_[id];
    switch (n.tag) {
      case Tag::Const:
        t = term::constant(n.comb);
        break;
      case Tag::Var:
        t = term::var(vars_[n.a]);
        break;
      case Tag::Num:
        t = numeral(words_[n.a]);
        break;
      case Tag::App:
        t = term::app(read(n.a), read(n.b));
        break;
      case Tag::Ind:
        break;
    }
    read_.emplace(id, t);
    return t;
  }

  void normalize(std::uint32_t id) {
    whnf(id);
    id = follow(id);
    Node& n = nodes_[id];
    if (n.tag == Tag::Const && n.comb == Comb::Eps) {
      nodes_[id] = num(Word());
      return;
    }
    if (n.tag != Tag::App) return;

    // Numeral chains are walked iteratively.
    std::vector<std::uint32_t> chain;
    std::uint32_t cur = id;
    std::string bits;
    while (nodes_[cur].tag == Tag::App) {
      const Node& fn = nodes_[follow(nodes_[cur].a)];
      if (fn.tag != Tag::Const || (fn.comb != Comb::S0 && fn.comb != Comb::S1)) break;
      chain.push_back(cur);
      bits.push_back(fn.comb == Comb::S0 ? '0' : '1');
      cur = follow(nodes_[cur].b);
      whnf(cur);
      cur = follow(cur);
    }
    if (!chain.empty()) {
      normalize(cur);
      cur = follow(cur);
      if (nodes_[cur].tag == Tag::Num) {
        std::string w = words_[nodes_[cur].a].bits();
        for (std::size_t i = chain.size(); i-- > 0;) {
          w.push_back(bits[i]);
          nodes_[chain[i]] = num(Word::fromBits(w));
        }
      }
      return;
    }

    std::vector<std::uint32_t> args;
    cur = id;
    while (nodes_[cur].tag == Tag::App) {
      args.push_back(nodes_[cur].b);
      cur = follow(nodes_[cur].a);
    }
    for (auto it = args.rbegin(); it != args.rend(); ++it) normalize(*it);
  }

  std::uint64_t steps() const { return steps_; }

 private:
  enum class Tag : std::uint8_t { Const, Var, App, Num, Ind };
  struct Node {
    Tag tag;
    Comb comb;
    std::uint32_t a;
    std::uint32_t b;
  };

  std::uint32_t add(Node n) {
    nodes_.push_back(n);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  Node num(Word w) {
    words_.push_back(std::move(w));
    return {Tag::Num, Comb::K, static_cast<std::uint32_t>(words_.size() - 1), 0};
  }

  std::uint32_t newNum(Word w) { return add(num(std::move(w))); }
  std::uint32_t newApp(std::uint32_t f, std::uint32_t a) { return add({Tag::App, Comb::K, f, a}); }

  std::uint32_t follow(std::uint32_t id) {
    std::uint32_t r = id;
    while (nodes_[r].tag == Tag::Ind) r = nodes_[r].a;
    while (nodes_[id].tag == Tag::Ind && nodes_[id].a != r) {
      std::uint32_t next = nodes_[id].a;
      nodes_[id].a = r;
      id = next;
    }
    return r;
  }

  static std::size_t ruleArity(Comb c) {
    switch (c) {
      case Comb::K:
      case Comb::CSub:
      case Comb::Star:
      case Comb::Times:
        return 2;
      case Comb::S:
        return 3;
      case Comb::CW:
        return 4;
      case Comb::P0:
      case Comb::P1:
      case Comb::PW:
      case Comb::SL:
      case Comb::PL:
        return 1;
      default:
        return 0;  // p, eps, s0, s1 build values
    }
  }

  std::optional<Word> wordOf(std::uint32_t id) {
    normalize(id);
    const Node& n = nodes_[follow(id)];
    if (n.tag != Tag::Num) return std::nullopt;
    return words_[n.a];
  }

  // Result of the redex with head c and the given arguments, or nullopt if
  // it is stuck.
  std::optional<std::uint32_t> fire(Comb c, const std::vector<std::uint32_t>& x) {
    switch (c) {
      case Comb::K:
        return x[0];
      case Comb::S:
        return newApp(newApp(x[0], x[2]), newApp(x[1], x[2]));
      case Comb::P0:
      case Comb::P1: {
        whnf(x[0]);
        std::uint32_t cur = follow(x[0]);
        std::vector<std::uint32_t> pargs;
        while (nodes_[cur].tag == Tag::App) {
          pargs.push_back(nodes_[cur].b);
          cur = follow(nodes_[cur].a);
        }
        if (pargs.size() != 2 || nodes_[cur].tag != Tag::Const || nodes_[cur].comb != Comb::P) return std::nullopt;
        return c == Comb::P0 ? pargs[1] : pargs[0];
      }
      case Comb::CW: {
        auto w = wordOf(x[0]);
        if (!w) return std::nullopt;
        if (w->empty()) return x[1];
        return w->last() == Bit::Zero ? x[2] : x[3];
      }
      case Comb::PW:
      case Comb::SL:
      case Comb::PL: {
        auto w = wordOf(x[0]);
        if (!w) return std::nullopt;
        if (c == Comb::PW) return newNum(words::binPred(*w));
        return newNum(c == Comb::SL ? words::numSucc(*w) : words::numPred(*w));
      }
      case Comb::CSub:
      case Comb::Star:
      case Comb::Times: {
        auto u = wordOf(x[0]);
        if (!u) return std::nullopt;
        auto v = wordOf(x[1]);
        if (!v) return std::nullopt;
        if (c == Comb::CSub) return newNum(Word::fromBits(words::isPrefix(*u, *v) ? "0" : "1"));
        if (c == Comb::Star) return newNum(words::concat(*u, *v));
        // x × y is x repeated |y| times, as the multiplication axioms unfold.
        std::string bits;
        for (std::size_t i = 0; i < v->size(); ++i) bits += u->bits();
        return newNum(Word::fromBits(bits));
      }
      default:
        return std::nullopt;
    }
  }

  void whnf(std::uint32_t root) {
    std::vector<std::uint32_t> apps;
    std::vector<std::uint32_t> args;
    for (;;) {
      apps.clear();
      std::uint32_t cur = follow(root);
      while (nodes_[cur].tag == Tag::App) {
        apps.push_back(cur);
        cur = follow(nodes_[cur].a);
      }
      if (nodes_[cur].tag != Tag::Const) return;
      std::size_t arity = ruleArity(nodes_[cur].comb);
      if (arity == 0 || apps.size() < arity) return;
      std::reverse(apps.begin(), apps.end());
      args.clear();
      for (std::size_t i = 0; i < arity; ++i) args.push_back(nodes_[apps[i]].b);
      std::uint32_t redex = apps[arity - 1];
      auto result = fire(nodes_[cur].comb, args);
      if (!result) return;
      if (++steps_ > max_) throw BudgetExhausted(max_);
      std::uint32_t r = follow(*result);
      if (r == redex) return;
      nodes_[redex] = {Tag::Ind, Comb::K, r, 0};
    }
  }

  std::vector<Node> nodes_;
  std::vector<Word> words_;
  std::vector<std::string> vars_;
  std::unordered_map<const TermNode*, std::uint32_t> loaded_;
  std::unordered_map<std::uint32_t, CombTerm> read_;
  std::uint64_t steps_ = 0;
  std::uint64_t max_;
};

}  // namespace

Reduction reduce(const CombTerm& t, EvalBudget budget) {
  Graph g(budget);
  std::uint32_t root = g.load(t);
  g.normalize(root);
  return {g.read(root), g.steps()};
}

CombTerm bracketAbstract(const std::string& var, const CombTerm& body) {
  using K = TermNode::Kind;
  if (!occursIn(var, body)) return term::app(term::constant(Comb::K), body);
  if (body->kind == K::Var) {
    return term::app(term::constant(Comb::S), {term::constant(Comb::K), term::constant(Comb::K)});
  }
  // body is an application containing var
  if (body->arg->kind == K::Var && body->arg->name == var && !occursIn(var, body->fun)) return body->fun;
  return term::app(term::constant(Comb::S), {bracketAbstract(var, body->fun), bracketAbstract(var, body->arg)});
}

CombTerm lambda(const std::vector<std::string>& vars, const CombTerm& body) {
  CombTerm t = body;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) t = bracketAbstract(*it, t);
  return t;
}

CombTerm fixpoint(const CombTerm& f) {
  CombTerm x = term::var("__fix");
  CombTerm w = bracketAbstract("__fix", term::app(f, term::app(x, x)));
  return term::app(w, w);
}

}  // namespace phalg
