#include "phalg/parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace phalg {

namespace {

struct Sexp {
  bool isAtom = false;
  std::string atom;
  std::vector<Sexp> list;
  std::size_t line = 0;
  std::size_t col = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexp> readAll() {
    std::vector<Sexp> out;
    skipSpace();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skipSpace();
    }
    return out;
  }

 private:
  Sexp read() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError(line_, col_, "unexpected end of input");
    Sexp s;
    s.line = line_;
    s.col = col_;
    char c = text_[pos_];
    if (c == ')') throw ParseError(line_, col_, "unexpected ')'");
    if (c == '(') {
      advance();
      for (;;) {
        skipSpace();
        if (pos_ >= text_.size()) throw ParseError(s.line, s.col, "unclosed '('");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        s.list.push_back(read());
      }
      return s;
    }
    s.isAtom = true;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      s.atom.push_back(d);
      advance();
    }
    return s;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const std::set<std::string, std::less<>> kKeywords = {
    "eps", "s0",   "s1",  "s0b",  "s1b", "binpred", "numpred", "caseq", "mul",  "proj", "sproj",
    "comp", "lift", "pc", "spc", "brn", "bpr",     "mbpr",    "prn",   "ppr", "mppr", "defu", "defs"};

[[noreturn]] void fail(const Sexp& s, const std::string& msg) { throw ParseError(s.line, s.col, msg); }

std::size_t nat(const Sexp& s) {
  if (!s.isAtom || s.atom.empty()) fail(s, "expected a natural number");
  for (char c : s.atom) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(s, "expected a natural number, got '" + s.atom + "'");
  }
  return std::stoul(s.atom);
}

std::string name(const Sexp& s) {
  if (!s.isAtom) fail(s, "expected a name");
  if (kKeywords.count(s.atom)) fail(s, "keyword '" + s.atom + "' used as a name");
  if (s.atom.empty() || std::isdigit(static_cast<unsigned char>(s.atom[0]))) {
    fail(s, "invalid name '" + s.atom + "'");
  }
  return s.atom;
}

void arity(const Sexp& s, std::size_t n) {
  if (s.list.size() != n + 1) {
    fail(s, "'" + s.list[0].atom + "' takes " + std::to_string(n) + " argument(s), got " +
                std::to_string(s.list.size() - 1));
  }
}

UDef parseU(const Sexp& s) {
  if (s.isAtom) {
    if (s.atom == "eps") return u::eps();
    if (s.atom == "caseq") return u::caseQ();
    if (s.atom == "mul") return u::mul();
    return u::ref(name(s));
  }
  if (s.list.empty() || !s.list[0].isAtom) fail(s, "expected an operator");
  const std::string& op = s.list[0].atom;
  if (op == "s0" || op == "s1") {
    arity(s, 0);
    return u::succ(op == "s0" ? Bit::Zero : Bit::One);
  }
  if (op == "proj") {
    arity(s, 2);
    return u::proj(nat(s.list[1]), nat(s.list[2]));
  }
  if (op == "comp") {
    if (s.list.size() < 2) fail(s, "'comp' needs a function");
    std::vector<UDef> hs;
    for (std::size_t i = 2; i < s.list.size(); ++i) hs.push_back(parseU(s.list[i]));
    return u::comp(parseU(s.list[1]), std::move(hs));
  }
  if (op == "lift") {
    if (s.list.size() < 3) fail(s, "'lift' needs an arity and a function");
    std::vector<UDef> hs;
    for (std::size_t i = 3; i < s.list.size(); ++i) hs.push_back(parseU(s.list[i]));
    return u::comp(nat(s.list[1]), parseU(s.list[2]), std::move(hs));
  }
  if (op == "brn") {
    arity(s, 4);
    return u::brn(parseU(s.list[1]), parseU(s.list[2]), parseU(s.list[3]), parseU(s.list[4]));
  }
  if (op == "bpr" || op == "mbpr") {
    arity(s, 3);
    auto g = parseU(s.list[1]);
    auto h = parseU(s.list[2]);
    auto t = parseU(s.list[3]);
    return op == "bpr" ? u::bpr(g, h, t) : u::mbpr(g, h, t);
  }
  fail(s, "unknown unsorted operator '" + op + "'");
}

std::vector<SDef> parseSList(const Sexp& s);

SDef parseS(const Sexp& s) {
  if (s.isAtom) {
    if (s.atom == "eps") return s::eps();
    if (s.atom == "binpred") return s::binPred();
    if (s.atom == "numpred") return s::numPred();
    if (s.atom == "caseq") return s::caseQ();
    if (s.atom == "mul") return s::mul();
    return s::ref(name(s));
  }
  if (s.list.empty() || !s.list[0].isAtom) fail(s, "expected an operator");
  const std::string& op = s.list[0].atom;
  if (op == "s0" || op == "s1") {
    arity(s, 0);
    return s::succNormal(op == "s0" ? Bit::Zero : Bit::One);
  }
  if (op == "s0b" || op == "s1b") {
    arity(s, 0);
    return s::succBounded(op == "s0b" ? Bit::Zero : Bit::One);
  }
  if (op == "sproj") {
    arity(s, 3);
    return s::proj(nat(s.list[1]), nat(s.list[2]), nat(s.list[3]));
  }
  if (op == "pc") {
    arity(s, 3);
    return s::pc(parseS(s.list[1]), parseSList(s.list[2]), parseSList(s.list[3]));
  }
  if (op == "spc") {
    arity(s, 5);
    Sig sig{nat(s.list[1]), nat(s.list[2])};
    return s::pc(sig, parseS(s.list[3]), parseSList(s.list[4]), parseSList(s.list[5]));
  }
  if (op == "prn") {
    arity(s, 3);
    return s::prn(parseS(s.list[1]), parseS(s.list[2]), parseS(s.list[3]));
  }
  if (op == "ppr" || op == "mppr") {
    arity(s, 2);
    auto g = parseS(s.list[1]);
    auto h = parseS(s.list[2]);
    return op == "ppr" ? s::ppr(g, h) : s::mppr(g, h);
  }
  fail(s, "unknown sorted operator '" + op + "'");
}

std::vector<SDef> parseSList(const Sexp& s) {
  if (s.isAtom) fail(s, "expected a parenthesized list");
  std::vector<SDef> out;
  for (const Sexp& e : s.list) out.push_back(parseS(e));
  return out;
}

void printU(std::ostream& os, const UDef& d) {
  switch (d->op) {
    case UOp::Eps:
      os << "eps";
      return;
    case UOp::Succ:
      os << (d->bit == Bit::Zero ? "(s0)" : "(s1)");
      return;
    case UOp::Proj:
      os << "(proj " << d->arity << ' ' << d->index << ')';
      return;
    case UOp::CaseQ:
      os << "caseq";
      return;
    case UOp::Mul:
      os << "mul";
      return;
    case UOp::Comp:
      if (compNeedsExplicitArity(*d)) {
        os << "(lift " << d->arity;
      } else {
        os << "(comp";
      }
      break;
    case UOp::BRN:
      os << "(brn";
      break;
    case UOp::BPR:
      os << "(bpr";
      break;
    case UOp::MBPR:
      os << "(mbpr";
      break;
    case UOp::Ref:
      os << d->name;
      return;
  }
  for (const auto& k : d->kids) {
    os << ' ';
    printU(os, k);
  }
  os << ')';
}

void printS(std::ostream& os, const SDef& d) {
  switch (d->op) {
    case SOp::Eps:
      os << "eps";
      return;
    case SOp::Proj:
      os << "(sproj " << d->sig.normal << ' ' << d->sig.safe << ' ' << d->index << ')';
      return;
    case SOp::SuccNormal:
      os << (d->bit == Bit::Zero ? "(s0)" : "(s1)");
      return;
    case SOp::SuccBounded:
      os << (d->bit == Bit::Zero ? "(s0b)" : "(s1b)");
      return;
    case SOp::BinPred:
      os << "binpred";
      return;
    case SOp::NumPred:
      os << "numpred";
      return;
    case SOp::CaseQ:
      os << "caseq";
      return;
    case SOp::Mul:
      os << "mul";
      return;
    case SOp::PC: {
      if (pcNeedsExplicitSig(*d)) {
        os << "(spc " << d->sig.normal << ' ' << d->sig.safe << ' ';
      } else {
        os << "(pc ";
      }
      printS(os, d->kids[0]);
      os << " (";
      for (std::size_t i = 0; i < d->numNormal; ++i) {
        if (i) os << ' ';
        printS(os, d->kids[1 + i]);
      }
      os << ") (";
      for (std::size_t i = 0; i < d->numSafe(); ++i) {
        if (i) os << ' ';
        printS(os, d->kids[1 + d->numNormal + i]);
      }
      os << "))";
      return;
    }
    case SOp::PRN:
      os << "(prn";
      break;
    case SOp::PPR:
      os << "(ppr";
      break;
    case SOp::MPPR:
      os << "(mppr";
      break;
    case SOp::Ref:
      os << d->name;
      return;
  }
  for (const auto& k : d->kids) {
    os << ' ';
    printS(os, k);
  }
  os << ')';
}

}  // namespace

DefTable parseFile(std::string_view text) {
  DefTable table;
  for (const Sexp& s : Reader(text).readAll()) {
    if (s.isAtom || s.list.empty() || !s.list[0].isAtom) fail(s, "expected (defu ...) or (defs ...)");
    const std::string& kw = s.list[0].atom;
    if (kw == "defu") {
      arity(s, 3);
      std::string n = name(s.list[1]);
      if (table.contains(n)) fail(s.list[1], "duplicate definition '" + n + "'");
      table.addUnsorted(n, nat(s.list[2]), parseU(s.list[3]));
    } else if (kw == "defs") {
      arity(s, 3);
      std::string n = name(s.list[1]);
      if (table.contains(n)) fail(s.list[1], "duplicate definition '" + n + "'");
      const Sexp& sig = s.list[2];
      if (sig.isAtom || sig.list.size() != 2) fail(sig, "expected a signature (K N)");
      table.addSorted(n, Sig{nat(sig.list[0]), nat(sig.list[1])}, parseS(s.list[3]));
    } else {
      fail(s, "expected 'defu' or 'defs', got '" + kw + "'");
    }
  }
  return table;
}

DefTable loadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseFile(buf.str());
}

std::string printUnsorted(const UDef& def) {
  std::ostringstream os;
  printU(os, def);
  return os.str();
}

std::string printSorted(const SDef& def) {
  std::ostringstream os;
  printS(os, def);
  return os.str();
}

std::string printDef(const Definition& def) {
  if (def.isSorted()) {
    const auto& e = def.sorted();
    return "(defs " + def.name + " (" + std::to_string(e.sig.normal) + ' ' +
           std::to_string(e.sig.safe) + ") " + printSorted(e.body) + ')';
  }
  const auto& e = def.unsorted();
  return "(defu " + def.name + ' ' + std::to_string(e.arity) + ' ' + printUnsorted(e.body) + ')';
}

std::string printTable(const DefTable& table) {
  std::string out;
  for (const Definition& d : table) {
    out += printDef(d);
    out += '\n';
  }
  return out;
}

}  // namespace phalg
