#include "phalg/algebra.hpp"

#include <unordered_set>

namespace phalg {

namespace {

UDef makeU(UNode n) { return std::make_shared<const UNode>(std::move(n)); }
SDef makeS(SNode n) { return std::make_shared<const SNode>(std::move(n)); }

}  // namespace

namespace u {

UDef eps() { return makeU({.op = UOp::Eps}); }
UDef succ(Bit b) { return makeU({.op = UOp::Succ, .bit = b}); }
UDef proj(std::size_t n, std::size_t j) { return makeU({.op = UOp::Proj, .arity = n, .index = j}); }
UDef caseQ() { return makeU({.op = UOp::CaseQ}); }
UDef mul() { return makeU({.op = UOp::Mul}); }

UDef comp(UDef g, std::vector<UDef> hs) {
  // Arity of the composite is fixed by the checker from hs; store 0 as a
  // placeholder only when hs is empty.
  UNode n{.op = UOp::Comp};
  n.kids.push_back(std::move(g));
  for (auto& h : hs) n.kids.push_back(std::move(h));
  return makeU(std::move(n));
}

UDef comp(std::size_t arity, UDef g, std::vector<UDef> hs) {
  UNode n{.op = UOp::Comp, .arity = arity, .explicitArity = true};
  n.kids.push_back(std::move(g));
  for (auto& h : hs) n.kids.push_back(std::move(h));
  return makeU(std::move(n));
}

UDef brn(UDef g, UDef h0, UDef h1, UDef t) {
  return makeU({.op = UOp::BRN, .kids = {std::move(g), std::move(h0), std::move(h1), std::move(t)}});
}
UDef bpr(UDef g, UDef h, UDef t) {
  return makeU({.op = UOp::BPR, .kids = {std::move(g), std::move(h), std::move(t)}});
}
UDef mbpr(UDef g, UDef h, UDef t) {
  return makeU({.op = UOp::MBPR, .kids = {std::move(g), std::move(h), std::move(t)}});
}
UDef ref(std::string name) { return makeU({.op = UOp::Ref, .name = std::move(name)}); }

}  // namespace u

std::string toString(const Sig& s) {
  return "(" + std::to_string(s.normal) + ";" + std::to_string(s.safe) + ")";
}

namespace s {

SDef eps() { return makeS({.op = SOp::Eps}); }
SDef proj(std::size_t k, std::size_t n, std::size_t i) {
  return makeS({.op = SOp::Proj, .sig = {k, n}, .index = i});
}
SDef succNormal(Bit b) { return makeS({.op = SOp::SuccNormal, .bit = b}); }
SDef succBounded(Bit b) { return makeS({.op = SOp::SuccBounded, .bit = b}); }
SDef binPred() { return makeS({.op = SOp::BinPred}); }
SDef numPred() { return makeS({.op = SOp::NumPred}); }
SDef caseQ() { return makeS({.op = SOp::CaseQ}); }
SDef mul() { return makeS({.op = SOp::Mul}); }

SDef pc(SDef g, std::vector<SDef> rs, std::vector<SDef> ss) {
  SNode n{.op = SOp::PC};
  n.kids.push_back(std::move(g));
  n.numNormal = rs.size();
  for (auto& r : rs) n.kids.push_back(std::move(r));
  for (auto& x : ss) n.kids.push_back(std::move(x));
  return makeS(std::move(n));
}

SDef pc(Sig sig, SDef g, std::vector<SDef> rs, std::vector<SDef> ss) {
  SNode n{.op = SOp::PC, .sig = sig, .explicitSig = true};
  n.kids.push_back(std::move(g));
  n.numNormal = rs.size();
  for (auto& r : rs) n.kids.push_back(std::move(r));
  for (auto& x : ss) n.kids.push_back(std::move(x));
  return makeS(std::move(n));
}

SDef prn(SDef g, SDef h0, SDef h1) {
  return makeS({.op = SOp::PRN, .kids = {std::move(g), std::move(h0), std::move(h1)}});
}
SDef ppr(SDef g, SDef h) { return makeS({.op = SOp::PPR, .kids = {std::move(g), std::move(h)}}); }
SDef mppr(SDef g, SDef h) { return makeS({.op = SOp::MPPR, .kids = {std::move(g), std::move(h)}}); }
SDef ref(std::string name) { return makeS({.op = SOp::Ref, .name = std::move(name)}); }

}  // namespace s

bool compNeedsExplicitArity(const UNode& n) {
  return n.explicitArity && n.kids.size() == 1 && n.arity != 0;
}

bool pcNeedsExplicitSig(const SNode& n) {
  if (!n.explicitSig) return false;
  if (n.numSafe() > 0) return false;
  if (n.numNormal > 0) return n.sig.safe != 0;
  return n.sig.normal != 0 || n.sig.safe != 0;
}

bool equal(const UDef& a, const UDef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->kids.size() != b->kids.size()) return false;
  switch (a->op) {
    case UOp::Succ:
      if (a->bit != b->bit) return false;
      break;
    case UOp::Proj:
      if (a->arity != b->arity || a->index != b->index) return false;
      break;
    case UOp::Comp:
      // Inferred and explicit arities agree once checked; compare only the
      // explicit ones that matter.
      if (compNeedsExplicitArity(*a) != compNeedsExplicitArity(*b)) return false;
      if (compNeedsExplicitArity(*a) && a->arity != b->arity) return false;
      break;
    case UOp::Ref:
      if (a->name != b->name) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!equal(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

bool equal(const SDef& a, const SDef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->kids.size() != b->kids.size()) return false;
  switch (a->op) {
    case SOp::Proj:
      if (a->sig != b->sig || a->index != b->index) return false;
      break;
    case SOp::SuccNormal:
    case SOp::SuccBounded:
      if (a->bit != b->bit) return false;
      break;
    case SOp::PC:
      if (a->numNormal != b->numNormal) return false;
      if (pcNeedsExplicitSig(*a) != pcNeedsExplicitSig(*b)) return false;
      if (pcNeedsExplicitSig(*a) && a->sig != b->sig) return false;
      break;
    case SOp::Ref:
      if (a->name != b->name) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!equal(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

void DefTable::add(Definition def) {
  if (index_.count(def.name)) throw Error("duplicate definition '" + def.name + "'");
  index_.emplace(def.name, defs_.size());
  defs_.push_back(std::move(def));
}

void DefTable::addUnsorted(std::string name, std::size_t arity, UDef body) {
  add(Definition{std::move(name), UnsortedEntry{std::move(body), arity}});
}

void DefTable::addSorted(std::string name, Sig sig, SDef body) {
  add(Definition{std::move(name), SortedEntry{std::move(body), sig}});
}

const Definition& DefTable::resolve(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownSymbol(name);
  return defs_[it->second];
}

const Definition* DefTable::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &defs_[it->second];
}

std::optional<std::size_t> DefTable::position(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool equal(const DefTable& a, const DefTable& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Definition& x = a[i];
    const Definition& y = b[i];
    if (x.name != y.name || x.isSorted() != y.isSorted()) return false;
    if (x.isSorted()) {
      if (x.sorted().sig != y.sorted().sig || !equal(x.sorted().body, y.sorted().body)) return false;
    } else {
      if (x.unsorted().arity != y.unsorted().arity || !equal(x.unsorted().body, y.unsorted().body))
        return false;
    }
  }
  return true;
}

namespace {

std::string arityStr(std::size_t n) { return "arity " + std::to_string(n); }

// Refs visible to the checker: when checking a table entry, only earlier
// entries may be referenced.
struct Scope {
  const DefTable& table;
  std::size_t limit;

  const Definition& lookup(const std::string& name, const std::string& path) const {
    auto pos = table.position(name);
    if (!pos) throw UnknownSymbol(name);
    if (*pos >= limit) throw SortError(path, "reference to an earlier definition", "'" + name + "'");
    return table[*pos];
  }
};

std::size_t checkU(const UDef& d, const Scope& sc, const std::string& path) {
  switch (d->op) {
    case UOp::Eps:
      return 0;
    case UOp::Succ:
      return 1;
    case UOp::Proj:
      if (d->index < 1 || d->index > d->arity) {
        throw SortError(path + "/proj", "1 <= j <= " + std::to_string(d->arity),
                        "j = " + std::to_string(d->index));
      }
      return d->arity;
    case UOp::CaseQ:
      return 4;
    case UOp::Mul:
      return 2;
    case UOp::Comp: {
      std::size_t ga = checkU(d->kids[0], sc, path + "/comp.g");
      std::size_t nh = d->kids.size() - 1;
      if (ga != nh) throw SortError(path + "/comp.g", arityStr(nh), arityStr(ga));
      std::optional<std::size_t> arity;
      if (d->explicitArity || nh == 0) arity = d->arity;
      for (std::size_t i = 1; i <= nh; ++i) {
        std::string p = path + "/comp." + std::to_string(i);
        std::size_t ha = checkU(d->kids[i], sc, p);
        if (!arity) arity = ha;
        if (ha != *arity) throw SortError(p, arityStr(*arity), arityStr(ha));
      }
      return *arity;
    }
    case UOp::BRN:
    case UOp::BPR:
    case UOp::MBPR: {
      const char* tag = d->op == UOp::BRN ? "brn" : d->op == UOp::BPR ? "bpr" : "mbpr";
      std::string p = path + "/" + tag;
      std::size_t n = checkU(d->kids[0], sc, p + ".g");
      std::size_t nh = d->kids.size() - 2;
      for (std::size_t i = 1; i <= nh; ++i) {
        std::string hp = p + (nh == 2 ? ".h" + std::to_string(i - 1) : std::string(".h"));
        std::size_t ha = checkU(d->kids[i], sc, hp);
        if (ha != n + 2) throw SortError(hp, arityStr(n + 2), arityStr(ha));
      }
      std::size_t ta = checkU(d->kids.back(), sc, p + ".t");
      if (ta != n + 1) throw SortError(p + ".t", arityStr(n + 1), arityStr(ta));
      return n + 1;
    }
    case UOp::Ref: {
      const Definition& def = sc.lookup(d->name, path);
      if (def.isSorted()) {
        throw SortError(path, "unsorted definition", "sorted '" + d->name + "'");
      }
      return def.unsorted().arity;
    }
  }
  return 0;
}

Sig checkS(const SDef& d, const Scope& sc, const std::string& path) {
  switch (d->op) {
    case SOp::Eps:
      return {0, 0};
    case SOp::Proj:
      if (d->index < 1 || d->index > d->sig.total()) {
        throw SortError(path + "/sproj", "1 <= i <= " + std::to_string(d->sig.total()),
                        "i = " + std::to_string(d->index));
      }
      return d->sig;
    case SOp::SuccNormal:
      return {1, 0};
    case SOp::SuccBounded:
      return {1, 1};
    case SOp::BinPred:
    case SOp::NumPred:
      return {0, 1};
    case SOp::CaseQ:
      return {0, 4};
    case SOp::Mul:
      return {2, 0};
    case SOp::PC: {
      Sig g = checkS(d->kids[0], sc, path + "/pc.g");
      std::size_t nr = d->numNormal;
      std::size_t ns = d->numSafe();
      if (g != Sig{nr, ns}) throw SortError(path + "/pc.g", toString(Sig{nr, ns}), toString(g));
      std::optional<Sig> sig;
      if (d->explicitSig) sig = d->sig;
      for (std::size_t i = 0; i < nr; ++i) {
        std::string p = path + "/pc.r" + std::to_string(i + 1);
        Sig r = checkS(d->kids[1 + i], sc, p);
        if (r.safe != 0) throw SortError(p, "normal-only signature (k;0)", toString(r));
        if (!sig) sig = Sig{r.normal, 0};
        if (r.normal != sig->normal) throw SortError(p, toString(Sig{sig->normal, 0}), toString(r));
      }
      for (std::size_t i = 0; i < ns; ++i) {
        std::string p = path + "/pc.s" + std::to_string(i + 1);
        Sig x = checkS(d->kids[1 + nr + i], sc, p);
        if (!sig) sig = x;
        if (nr > 0 && !d->explicitSig && i == 0) sig->safe = x.safe;
        if (x != *sig) throw SortError(p, toString(*sig), toString(x));
      }
      if (!sig) sig = d->sig;
      return *sig;
    }
    case SOp::PRN:
    case SOp::PPR:
    case SOp::MPPR: {
      const char* tag = d->op == SOp::PRN ? "prn" : d->op == SOp::PPR ? "ppr" : "mppr";
      std::string p = path + "/" + tag;
      Sig g = checkS(d->kids[0], sc, p + ".g");
      std::size_t nh = d->kids.size() - 1;
      Sig want{g.normal + 1, g.safe + 1};
      for (std::size_t i = 1; i <= nh; ++i) {
        std::string hp = p + (nh == 2 ? ".h" + std::to_string(i - 1) : std::string(".h"));
        Sig h = checkS(d->kids[i], sc, hp);
        if (h != want) throw SortError(hp, toString(want), toString(h));
      }
      return {g.normal + 1, g.safe};
    }
    case SOp::Ref: {
      const Definition& def = sc.lookup(d->name, path);
      if (!def.isSorted()) throw SortError(path, "sorted definition", "unsorted '" + d->name + "'");
      return def.sorted().sig;
    }
  }
  return {};
}

}  // namespace

std::size_t checkUnsorted(const UDef& def, const DefTable& table, const std::string& path) {
  return checkU(def, Scope{table, table.size()}, path);
}

Sig checkSorted(const SDef& def, const DefTable& table, const std::string& path) {
  return checkS(def, Scope{table, table.size()}, path);
}

void checkTable(const DefTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Definition& d = table[i];
    Scope sc{table, i};
    if (d.isSorted()) {
      Sig got = checkS(d.sorted().body, sc, d.name);
      if (got != d.sorted().sig) throw SortError(d.name, toString(d.sorted().sig), toString(got));
    } else {
      std::size_t got = checkU(d.unsorted().body, sc, d.name);
      if (got != d.unsorted().arity) {
        throw SortError(d.name, arityStr(d.unsorted().arity), arityStr(got));
      }
    }
  }
}

}  // namespace phalg
