#include "phalg/bound.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace phalg {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t satAdd(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }
std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

}  // namespace

BoundPoly BoundPoly::constant(std::size_t numVars, std::uint64_t c) {
  BoundPoly p(numVars);
  p.addTerm(Exponents(numVars, 0), c);
  return p;
}

BoundPoly BoundPoly::variable(std::size_t numVars, std::size_t i) {
  BoundPoly p(numVars);
  Exponents e(numVars, 0);
  e.at(i) = 1;
  p.addTerm(e, 1);
  return p;
}

void BoundPoly::addTerm(const Exponents& e, std::uint64_t c) {
  if (c == 0) return;
  auto& slot = terms_[e];
  slot = satAdd(slot, c);
}

unsigned BoundPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

BoundPoly& BoundPoly::operator+=(const BoundPoly& o) {
  if (o.vars_ != vars_) throw Error("BoundPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

BoundPoly& BoundPoly::maxWith(const BoundPoly& o) {
  if (o.vars_ != vars_) throw Error("BoundPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot = std::max(slot, c);
  }
  return *this;
}

BoundPoly operator*(const BoundPoly& a, const BoundPoly& b) {
  if (a.vars_ != b.vars_) throw Error("BoundPoly: variable count mismatch");
  BoundPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      BoundPoly::Exponents e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, satMul(ca, cb));
    }
  }
  return r;
}

BoundPoly BoundPoly::substitute(const std::vector<BoundPoly>& vals) const {
  if (vals.size() != vars_) throw Error("BoundPoly: substitution arity mismatch");
  std::size_t n = vals.empty() ? 0 : vals[0].vars_;
  BoundPoly r(n);
  for (const auto& [e, c] : terms_) {
    BoundPoly m = constant(n, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) m = m * vals[i];
    }
    r += m;
  }
  return r;
}

BoundPoly BoundPoly::rename(std::size_t numVars, const std::vector<std::size_t>& map) const {
  std::vector<BoundPoly> vals;
  for (std::size_t i = 0; i < vars_; ++i) vals.push_back(variable(numVars, map.at(i)));
  if (vars_ == 0) {
    BoundPoly r(numVars);
    for (const auto& [e, c] : terms_) r.addTerm(Exponents(numVars, 0), c);
    return r;
  }
  return substitute(vals);
}

BoundPoly BoundPoly::halved() const {
  BoundPoly r(vars_);
  for (const auto& [e, c] : terms_) r.addTerm(e, c / 2);
  return r;
}

std::uint64_t BoundPoly::eval(std::span<const std::size_t> lengths) const {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) m = satMul(m, lengths[i]);
    }
    sum = satAdd(sum, m);
  }
  return sum;
}

std::string BoundPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Higher degree first.
  std::vector<std::pair<Exponents, std::uint64_t>> ts(terms_.rbegin(), terms_.rend());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a.first) da += x;
    for (unsigned x : b.first) db += x;
    return da > db;
  });
  for (const auto& [e, c] : ts) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      if (e[i] > 1) v += "^" + std::to_string(e[i]);
      factors.push_back(v);
    }
    if (c != 1 || factors.empty()) {
      os << c;
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

BoundPoly SortedBounds::of(const SDef& d, Sig sig) {
  std::size_t k = sig.normal;
  switch (d->op) {
    case SOp::Eps:
    case SOp::BinPred:
    case SOp::NumPred:
    case SOp::CaseQ:
      return BoundPoly(k);
    case SOp::SuccNormal:
      return BoundPoly::variable(1, 0) + BoundPoly::constant(1, 1);
    case SOp::SuccBounded:
      return BoundPoly::variable(1, 0);
    case SOp::Mul:
      return BoundPoly::variable(2, 0) * BoundPoly::variable(2, 1);
    case SOp::Proj:
      return d->index <= k ? BoundPoly::variable(k, d->index - 1) : BoundPoly(k);
    case SOp::PC: {
      Sig gs{d->numNormal, d->numSafe()};
      BoundPoly qg = of(d->kids[0], gs);
      std::vector<BoundPoly> rs;
      for (std::size_t i = 0; i < d->numNormal; ++i) rs.push_back(of(d->kids[1 + i], {k, 0}));
      BoundPoly q = gs.normal == 0 ? qg.rename(k, {}) : qg.substitute(rs);
      for (std::size_t i = 0; i < d->numSafe(); ++i) q += of(d->kids[1 + d->numNormal + i], sig);
      return q;
    }
    case SOp::PRN:
    case SOp::PPR:
    case SOp::MPPR: {
      // f(z, x; y): variable 0 is the recursion argument.
      Sig gs{k - 1, sig.safe};
      Sig hs{k, sig.safe + 1};
      std::vector<std::size_t> shift;
      for (std::size_t i = 0; i < k - 1; ++i) shift.push_back(i + 1);
      BoundPoly q = of(d->kids[0], gs).rename(k, shift);
      BoundPoly steps(k);
      for (std::size_t i = 1; i < d->kids.size(); ++i) steps += of(d->kids[i], hs);
      if (d->op == SOp::PRN) {
        steps = (BoundPoly::variable(k, 0) + BoundPoly::constant(k, 1)) * steps;
      }
      return q + steps;
    }
    case SOp::Ref: {
      auto it = cache_.find(d->name);
      if (it != cache_.end()) return it->second;
      const SortedEntry& e = table_.resolve(d->name).sorted();
      BoundPoly q = of(e.body, e.sig);
      cache_.emplace(d->name, q);
      return q;
    }
  }
  return BoundPoly(k);
}

BoundPoly LengthBounds::of(const UDef& d, std::size_t n) {
  switch (d->op) {
    case UOp::Eps:
      return BoundPoly(n);
    case UOp::Succ:
      return BoundPoly::variable(1, 0) + BoundPoly::constant(1, 1);
    case UOp::Proj:
      return BoundPoly::variable(n, d->index - 1);
    case UOp::CaseQ:
      return BoundPoly::variable(4, 1) + BoundPoly::variable(4, 2) + BoundPoly::variable(4, 3);
    case UOp::Mul:
      return BoundPoly::variable(2, 0) * BoundPoly::variable(2, 1);
    case UOp::Comp: {
      std::size_t m = d->kids.size() - 1;
      BoundPoly qg = of(d->kids[0], m);
      if (m == 0) return qg.rename(n, {});
      std::vector<BoundPoly> hs;
      for (std::size_t i = 1; i <= m; ++i) hs.push_back(of(d->kids[i], n));
      return qg.substitute(hs);
    }
    case UOp::BRN:
    case UOp::BPR:
    case UOp::MBPR: {
      std::vector<std::size_t> shift;
      for (std::size_t i = 0; i + 1 < n; ++i) shift.push_back(i + 1);
      return of(d->kids[0], n - 1).rename(n, shift) + of(d->kids.back(), n);
    }
    case UOp::Ref: {
      auto it = cache_.find(d->name);
      if (it != cache_.end()) return it->second;
      const UnsortedEntry& e = table_.resolve(d->name).unsorted();
      BoundPoly q = of(e.body, e.arity);
      cache_.emplace(d->name, q);
      return q;
    }
  }
  return BoundPoly(n);
}

BoundPoly synthBound(const SDef& def, const DefTable& table) {
  Sig sig = checkSorted(def, table);
  return SortedBounds(table).of(def, sig);
}

BoundPoly lengthBound(const UDef& def, const DefTable& table) {
  std::size_t n = checkUnsorted(def, table);
  return LengthBounds(table).of(def, n);
}

BoundReport checkBound(const SDef& def, const DefTable& table, const BoundPoly& q,
                       std::span<const ArgSample> samples, EvalBudget budget) {
  BoundReport report;
  for (const ArgSample& s : samples) {
    Word v = evalSorted(def, s.normals, s.safes, table, budget).value;
    std::vector<std::size_t> lens;
    for (const Word& x : s.normals) lens.push_back(x.size());
    std::uint64_t bound = q.eval(lens);
    for (const Word& y : s.safes) bound = std::max<std::uint64_t>(bound, y.size());
    ++report.checked;
    if (v.size() > bound) report.violations.push_back({s.normals, s.safes, v.size(), bound});
  }
  return report;
}

namespace {

UDef ones(std::size_t arity, std::uint64_t c) {
  UDef w = u::eps();
  for (std::uint64_t i = 0; i < c; ++i) w = u::comp(u::succ(Bit::One), {w});
  return u::comp(arity, w, {});
}

SDef sortedOnes(std::size_t k, std::uint64_t c) {
  SDef w = s::pc(Sig{k, 0}, s::eps(), {}, {});
  for (std::uint64_t i = 0; i < c; ++i) w = s::pc(s::succNormal(Bit::One), {w}, {});
  return w;
}

}  // namespace

UDef polyToDef(const BoundPoly& q, std::size_t arity, const std::string& catName) {
  std::vector<UDef> parts;
  for (const auto& [e, c] : q.terms()) {
    UDef m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) {
        UDef x = u::proj(arity, i + 1);
        m = m ? u::comp(u::mul(), {m, x}) : x;
      }
    }
    if (!m) {
      parts.push_back(ones(arity, c));
      continue;
    }
    for (std::uint64_t k = 0; k < c; ++k) parts.push_back(m);
  }
  if (parts.empty()) return u::comp(arity, u::eps(), {});
  UDef sum = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    sum = u::comp(u::ref(catName), {sum, parts[i]});
  }
  return sum;
}

SDef polyToSorted(const BoundPoly& q, std::size_t k, const std::string& ncatName) {
  std::vector<SDef> parts;
  for (const auto& [e, c] : q.terms()) {
    SDef m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned j = 0; j < e[i]; ++j) {
        SDef x = s::proj(k, 0, i + 1);
        m = m ? s::pc(s::mul(), {m, x}, {}) : x;
      }
    }
    if (!m) {
      parts.push_back(sortedOnes(k, c));
      continue;
    }
    for (std::uint64_t j = 0; j < c; ++j) parts.push_back(m);
  }
  if (parts.empty()) return sortedOnes(k, 0);
  SDef sum = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    sum = s::pc(s::ref(ncatName), {sum, parts[i]}, {});
  }
  return sum;
}

}  // namespace phalg
