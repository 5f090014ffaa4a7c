#include "phalg/translate.hpp"

#include <map>
#include <numeric>

#include "phalg/bound.hpp"
#include "phalg/prelude.hpp"

namespace phalg {

namespace {

using Mask = std::vector<bool>;

std::vector<UDef> projs(std::size_t m, std::size_t from, std::size_t to) {
  std::vector<UDef> out;
  for (std::size_t j = from; j <= to; ++j) out.push_back(u::proj(m, j));
  return out;
}

std::vector<SDef> sprojs(std::size_t k, std::size_t n, std::size_t from, std::size_t to) {
  std::vector<SDef> out;
  for (std::size_t j = from; j <= to; ++j) out.push_back(s::proj(k, n, j));
  return out;
}

template <typename T>
std::vector<T> join(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SDef constEps(Sig sig) { return sig == Sig{} ? s::eps() : s::pc(sig, s::eps(), {}, {}); }

class Dependencies {
 public:
  explicit Dependencies(const DefTable& t) : table_(t) {}

  Mask of(const UDef& d, std::size_t m) {
    Mask out(m, false);
    switch (d->op) {
      case UOp::Eps:
        break;
      case UOp::Succ:
        out[0] = true;
        break;
      case UOp::Proj:
        out[d->index - 1] = true;
        break;
      case UOp::CaseQ:
      case UOp::Mul:
        out.assign(m, true);
        break;
      case UOp::Comp: {
        std::size_t r = d->kids.size() - 1;
        Mask g = of(d->kids[0], r);
        for (std::size_t i = 0; i < r; ++i) {
          if (!g[i]) continue;
          Mask h = of(d->kids[1 + i], m);
          for (std::size_t j = 0; j < m; ++j) out[j] = out[j] || h[j];
        }
        break;
      }
      case UOp::BRN:
      case UOp::BPR:
      case UOp::MBPR: {
        out[0] = true;
        Mask g = of(d->kids[0], m - 1);
        for (std::size_t j = 0; j + 1 < m; ++j) out[j + 1] = g[j];
        for (std::size_t i = 1; i + 1 < d->kids.size(); ++i) {
          Mask h = of(d->kids[i], m + 1);
          for (std::size_t j = 0; j < m; ++j) out[j] = out[j] || h[j];
        }
        Mask t = of(d->kids.back(), m);
        for (std::size_t j = 0; j < m; ++j) out[j] = out[j] || t[j];
        break;
      }
      case UOp::Ref: {
        auto it = cache_.find(d->name);
        if (it != cache_.end()) return it->second;
        const UnsortedEntry& e = table_.resolve(d->name).unsorted();
        out = of(e.body, e.arity);
        cache_.emplace(d->name, out);
        break;
      }
    }
    return out;
  }

 private:
  const DefTable& table_;
  std::map<std::string, Mask> cache_;
};

// Positions of the arguments of a tainted variant: normal arguments in
// order, then the clock; safe arguments in order.
struct Layout {
  std::size_t k = 1;
  std::size_t n = 0;
  std::vector<std::size_t> pos;  // 1-based index into (normals; safes)
  Mask safe;

  explicit Layout(const Mask& a) : safe(a) {
    std::size_t normals = 0;
    for (bool b : a) normals += b ? 0 : 1;
    k = normals + 1;
    std::size_t ni = 0;
    std::size_t si = 0;
    for (bool b : a) pos.push_back(b ? k + ++si : ++ni);
    n = si;
  }
  Sig sig() const { return {k, n}; }
  SDef arg(std::size_t j) const { return s::proj(k, n, pos[j]); }
  // In an all-normal (k;0) context; safe arguments read as eps.
  SDef normalArg(std::size_t j) const { return safe[j] ? constEps({k, 0}) : s::proj(k, 0, pos[j]); }
  SDef clock() const { return s::proj(k, 0, k); }
};

std::string maskName(const Mask& a) {
  std::string s;
  for (bool b : a) s += b ? '1' : '0';
  return s;
}

bool sameProjection(const UDef& h, const UDef& t, std::size_t m) {
  return h->op == UOp::Proj && t->op == UOp::Proj && h->index == t->index && h->index <= m;
}

class ToSorted {
 public:
  ToSorted(const DefTable& src, DefTable& out) : src_(src), out_(out), deps_(src), len_(src) {}

  // Signature (m;0).
  SDef normal(const UDef& d, std::size_t m) {
    switch (d->op) {
      case UOp::Eps:
        return constEps({m, 0});
      case UOp::Succ:
        return s::succNormal(d->bit);
      case UOp::Proj:
        return s::proj(m, 0, d->index);
      case UOp::CaseQ:
        return s::pc({4, 0}, s::caseQ(), {}, sprojs(4, 0, 1, 4));
      case UOp::Mul:
        return s::mul();
      case UOp::Comp: {
        std::size_t r = d->kids.size() - 1;
        std::vector<SDef> rs;
        for (std::size_t i = 1; i <= r; ++i) rs.push_back(normal(d->kids[i], m));
        return s::pc({m, 0}, normal(d->kids[0], r), rs, {});
      }
      case UOp::Ref:
        return s::ref(d->name);
      default:
        return recursionNormal(d, m);
    }
  }

  // Signature Layout(a).sig(): f with the arguments marked in `a` safe and a
  // clock w with |w| >= clock(f) appended to the normal ones.
  SDef tainted(const UDef& d, std::size_t m, const Mask& a) {
    Layout lay(a);
    Mask dep = deps_.of(d, m);
    bool touches = false;
    for (std::size_t j = 0; j < m; ++j) touches = touches || (dep[j] && a[j]);
    if (!touches) return liftNormal(normal(d, m), m, lay);
    switch (d->op) {
      case UOp::Proj:
        return lay.arg(d->index - 1);
      case UOp::Succ:
        return s::pc({1, 1}, s::succBounded(d->bit), {s::proj(1, 0, 1)}, {s::proj(1, 1, 2)});
      case UOp::CaseQ:
        return s::pc(lay.sig(), s::caseQ(), {}, {lay.arg(0), lay.arg(1), lay.arg(2), lay.arg(3)});
      case UOp::Mul:
        return s::pc(lay.sig(), s::ref(helper("__muls")), {lay.clock()}, {lay.arg(0), lay.arg(1)});
      case UOp::Comp:
        return compTainted(d, m, lay);
      case UOp::Ref:
        return s::ref(variant(d->name, a));
      default:
        return a[0] ? recursionOnSafe(d, m, lay) : recursionOnNormal(d, m, lay);
    }
  }

 private:
  std::string helper(const std::string& name) { return importHelper(out_, name); }

  // f evaluated with eps for its safe arguments (on which it does not
  // depend).
  SDef liftNormal(const SDef& f, std::size_t m, const Layout& lay) {
    std::vector<SDef> rs;
    for (std::size_t j = 0; j < m; ++j) rs.push_back(lay.normalArg(j));
    return s::pc(lay.sig(), f, rs, {});
  }

  SDef compTainted(const UDef& d, std::size_t m, const Layout& lay) {
    std::size_t r = d->kids.size() - 1;
    Mask gdep = deps_.of(d->kids[0], r);
    Mask b(r, false);
    for (std::size_t i = 0; i < r; ++i) {
      if (!gdep[i]) continue;
      Mask h = deps_.of(d->kids[1 + i], m);
      for (std::size_t j = 0; j < m; ++j) b[i] = b[i] || (h[j] && lay.safe[j]);
    }
    std::vector<SDef> rs;
    std::vector<SDef> ss;
    for (std::size_t i = 0; i < r; ++i) {
      const UDef& h = d->kids[1 + i];
      if (b[i]) {
        ss.push_back(tainted(h, m, lay.safe));
      } else if (gdep[i]) {
        std::vector<SDef> args;
        for (std::size_t j = 0; j < m; ++j) args.push_back(lay.normalArg(j));
        rs.push_back(s::pc({lay.k, 0}, normal(h, m), args, {}));
      } else {
        rs.push_back(constEps({lay.k, 0}));
      }
    }
    rs.push_back(lay.clock());
    return s::pc(lay.sig(), tainted(d->kids[0], r, b), rs, ss);
  }

  std::string variant(const std::string& name, const Mask& a) {
    std::string v = name + "__s_" + maskName(a);
    if (!out_.contains(v)) {
      const UnsortedEntry& e = src_.resolve(name).unsorted();
      SDef body = tainted(e.body, e.arity, a);
      out_.addSorted(v, Layout(a).sig(), body);
    }
    return v;
  }

  // A clock length sufficient for tainted(d, m, a) under any a. Every
  // consumer of the clock sees the same w, so requirements combine by max.
  BoundPoly clock(const UDef& d, std::size_t m) {
    switch (d->op) {
      case UOp::Eps:
      case UOp::Proj:
      case UOp::CaseQ:
        return BoundPoly(m);
      case UOp::Succ:
        return BoundPoly::variable(1, 0) + BoundPoly::constant(1, 1);
      case UOp::Mul: {
        BoundPoly x = BoundPoly::variable(2, 0);
        BoundPoly y = BoundPoly::variable(2, 1);
        return x * y + x + y + BoundPoly::constant(2, 1);
      }
      case UOp::Comp: {
        std::size_t r = d->kids.size() - 1;
        BoundPoly pg = clock(d->kids[0], r);
        std::vector<BoundPoly> qs;
        BoundPoly p(m);
        for (std::size_t i = 1; i <= r; ++i) {
          qs.push_back(len_.of(d->kids[i], m));
          p.maxWith(clock(d->kids[i], m));
        }
        return p.maxWith(r == 0 ? pg.rename(m, {}) : pg.substitute(qs));
      }
      case UOp::Ref: {
        auto it = clocks_.find(d->name);
        if (it != clocks_.end()) return it->second;
        const UnsortedEntry& e = src_.resolve(d->name).unsorted();
        BoundPoly p = clock(e.body, e.arity);
        clocks_.emplace(d->name, p);
        return p;
      }
      default: {
        std::vector<std::size_t> shift(m - 1);
        std::iota(shift.begin(), shift.end(), 1);
        // The counter for a recursion argument in a safe position.
        BoundPoly p = BoundPoly::variable(m, 0) + BoundPoly::constant(m, 2);
        p.maxWith(clock(d->kids[0], m - 1).rename(m, shift));
        p.maxWith(stepClock(d, m));
        return p;
      }
    }
  }

  // Clock needed by the truncated steps of a recursion, over (y, x).
  BoundPoly stepClock(const UDef& d, std::size_t m) {
    const BoundPoly one = BoundPoly::constant(m, 1);
    std::vector<BoundPoly> at;
    for (std::size_t j = 0; j < m; ++j) at.push_back(BoundPoly::variable(m, j));
    at.push_back(len_.of(d, m));
    BoundPoly p = len_.of(d->kids.back(), m) + one;
    p.maxWith(clock(d->kids.back(), m));
    for (std::size_t i = 1; i + 1 < d->kids.size(); ++i) {
      p.maxWith(clock(d->kids[i], m + 1).substitute(at));
      p.maxWith(len_.of(d->kids[i], m + 1).substitute(at) + one);
    }
    return p;
  }

  SDef truncated(Sig sig, const SDef& w, const SDef& value, const SDef& bound) {
    return s::pc(sig, s::ref(helper("__truncs")), {w}, {value, bound});
  }

  SDef rebuild(const UDef& d, const SDef& g, const std::vector<SDef>& hs) {
    switch (d->op) {
      case UOp::BRN:
        return s::prn(g, hs[0], hs[1]);
      case UOp::BPR:
        return s::ppr(g, hs[0]);
      default:
        return s::mppr(g, hs[0]);
    }
  }

  // All arguments normal: the recursion value moves to a safe slot, and each
  // step computes its own clock from (z, x).
  SDef recursionNormal(const UDef& d, std::size_t m) {
    const UDef& t = d->kids.back();
    SDef g = normal(d->kids[0], m - 1);
    BoundPoly need = stepClock(d, m);
    std::vector<SDef> hs;
    for (std::size_t i = 1; i + 1 < d->kids.size(); ++i) {
      const UDef& h = d->kids[i];
      if (sameProjection(h, t, m)) {
        hs.push_back(s::proj(m, 1, h->index));
        continue;
      }
      SDef w = polyToSorted(need, m, helper("__ncat"));
      Mask a(m + 1, false);
      a.back() = true;
      SDef hv = s::pc({m, 1}, tainted(h, m + 1, a), join(sprojs(m, 0, 1, m), {w}),
                      {s::proj(m, 1, m + 1)});
      SDef tv = s::pc({m, 1}, normal(t, m), sprojs(m, 0, 1, m), {});
      hs.push_back(truncated({m, 1}, w, hv, tv));
    }
    return rebuild(d, g, hs);
  }

  // Recursion argument normal, some parameters safe: the recursion runs on
  // y itself with the outer clock.
  SDef recursionOnNormal(const UDef& d, std::size_t m, const Layout& lay) {
    const UDef& t = d->kids.back();
    Mask ax(lay.safe.begin() + 1, lay.safe.end());
    SDef g = tainted(d->kids[0], m - 1, ax);
    Sig step{lay.k, lay.n + 1};
    SDef tv;
    std::vector<SDef> hs;
    for (std::size_t i = 1; i + 1 < d->kids.size(); ++i) {
      const UDef& h = d->kids[i];
      Mask a = lay.safe;
      a.push_back(true);
      SDef hv = tainted(h, m + 1, a);
      if (sameProjection(h, t, m)) {
        hs.push_back(hv);
        continue;
      }
      if (!tv) {
        tv = s::pc(step, tainted(t, m, lay.safe), sprojs(step.normal, 0, 1, step.normal),
                   sprojs(step.normal, step.safe, step.normal + 1, step.normal + lay.n));
      }
      hs.push_back(truncated(step, s::proj(step.normal, 0, step.normal), hv, tv));
    }
    return rebuild(d, g, hs);
  }

  // Recursion argument safe: iterate over a copy c of the clock w.
  //   BRN: step |u| handles the prefix of y of length |y| - |w| + |u| + 1,
  //        restarting from g while that prefix is empty.
  //   BPR/MBPR: step z applies h only while z comes before y.
  SDef recursionOnSafe(const UDef& d, std::size_t m, const Layout& lay) {
    const UDef& t = d->kids.back();
    Mask ax(lay.safe.begin() + 1, lay.safe.end());
    const std::size_t k = lay.k;
    const std::size_t n = lay.n;
    SDef g = tainted(d->kids[0], m - 1, ax);
    // g ignores y, the first safe argument.
    SDef base = s::pc(lay.sig(), g, sprojs(k, 0, 1, k), sprojs(k, n, k + 2, k + n));

    // Step context: normals (c, x_normal, w), safes (y, x_safe, prev).
    Sig step{k + 1, n + 1};
    SDef w = s::proj(k + 1, 0, k + 1);
    std::vector<SDef> xsafe = sprojs(k + 1, n + 1, k + 3, k + 1 + n);
    SDef prev = s::proj(k + 1, n + 1, k + 2 + n);
    SDef y = s::proj(k + 1, n + 1, k + 2);

    SDef body;
    if (d->op == UOp::BRN) {
      std::vector<SDef> rs = sprojs(k + 1, 0, 2, k + 1);  // x_normal, w
      SDef su = s::pc({k + 1, 0}, s::succNormal(Bit::One), {s::proj(k + 1, 0, 1)}, {});
      SDef rest = s::pc({k + 1, 0}, s::ref(helper("__dn")), {su, w}, {});
      SDef ynext = s::pc(step, s::ref(helper("__dsafe")), {rest}, {y});
      SDef ycur = s::pc(step, s::binPred(), {}, {ynext});
      SDef gcall = s::pc(step, g, rs, xsafe);
      std::vector<SDef> cases;
      for (std::size_t i = 1; i <= 2; ++i) {
        const UDef& h = d->kids[i];
        Mask a = lay.safe;
        a.push_back(true);
        SDef hv = s::pc(step, tainted(h, m + 1, a), rs, join(join({ycur}, xsafe), {prev}));
        if (!sameProjection(h, t, m)) {
          SDef tv = s::pc(step, tainted(t, m, lay.safe), rs, join({ycur}, xsafe));
          hv = truncated(step, w, hv, tv);
        }
        cases.push_back(hv);
      }
      body = s::prn(base, s::pc(step, s::caseQ(), {}, {ynext, gcall, cases[0], cases[1]}),
                    s::pc(step, s::caseQ(), {}, {ynext, gcall, cases[0], cases[1]}));
    } else {
      std::vector<SDef> rs = sprojs(k + 1, 0, 1, k + 1);  // z, x_normal, w
      SDef z = s::proj(k + 1, n + 1, 1);
      SDef guard = s::pc(step, s::ref(helper("__ltnu")), {w}, {z, y});
      const UDef& h = d->kids[1];
      Mask a = lay.safe;
      a[0] = false;
      Mask at = a;
      a.push_back(true);
      SDef hv = s::pc(step, tainted(h, m + 1, a), rs, join(xsafe, {prev}));
      if (!sameProjection(h, t, m)) {
        SDef tv = s::pc(step, tainted(t, m, at), rs, xsafe);
        hv = truncated(step, w, hv, tv);
      }
      SDef stepDef = s::pc(step, s::caseQ(), {}, {guard, prev, hv, hv});
      body = d->op == UOp::BPR ? s::ppr(base, stepDef) : s::mppr(base, stepDef);
    }
    return s::pc(lay.sig(), body, join({lay.clock()}, sprojs(k, 0, 1, k)), sprojs(k, n, k + 1, k + n));
  }

  const DefTable& src_;
  DefTable& out_;
  Dependencies deps_;
  LengthBounds len_;
  std::map<std::string, BoundPoly> clocks_;
};

class ToUnsorted {
 public:
  ToUnsorted(const DefTable& src, DefTable& out) : src_(src), out_(out), bounds_(src) {}

  UDef tr(const SDef& d, Sig sig) {
    std::size_t m = sig.total();
    switch (d->op) {
      case SOp::Eps:
        return m == 0 ? u::eps() : u::comp(m, u::eps(), {});
      case SOp::Proj:
        return u::proj(m, d->index);
      case SOp::SuccNormal:
        return u::succ(d->bit);
      case SOp::SuccBounded:
        return u::ref(helper(d->bit == Bit::Zero ? "__bsucc0" : "__bsucc1"));
      case SOp::BinPred:
        return u::ref(helper("__P"));
      case SOp::NumPred:
        return u::ref(helper("__npred"));
      case SOp::CaseQ:
        return u::caseQ();
      case SOp::Mul:
        return u::mul();
      case SOp::PC: {
        Sig gs{d->numNormal, d->numSafe()};
        std::vector<UDef> args;
        for (std::size_t i = 0; i < gs.normal; ++i) {
          UDef r = tr(d->kids[1 + i], {sig.normal, 0});
          args.push_back(sig.safe == 0 ? r : u::comp(m, r, projs(m, 1, sig.normal)));
        }
        for (std::size_t i = 0; i < gs.safe; ++i) args.push_back(tr(d->kids[1 + gs.normal + i], sig));
        return u::comp(m, tr(d->kids[0], gs), args);
      }
      case SOp::Ref:
        return u::ref(d->name);
      default:
        return recursion(d, sig);
    }
  }

 private:
  std::string helper(const std::string& name) { return importHelper(out_, name); }

  // The step value f(z', x; y) is at most q_f(|z|+1, |x|) + sum |y_j|, so
  // the bound never cuts.
  UDef recursion(const SDef& d, Sig sig) {
    std::size_t k = sig.normal;
    std::size_t m = sig.total();
    std::vector<BoundPoly> at;
    at.push_back(BoundPoly::variable(m, 0) + BoundPoly::constant(m, 1));
    for (std::size_t j = 1; j < k; ++j) at.push_back(BoundPoly::variable(m, j));
    BoundPoly q = bounds_.of(d, sig).substitute(at);
    std::string cat = helper("__cat");
    UDef bound = polyToDef(q, m, cat);
    for (std::size_t j = k + 1; j <= m; ++j) bound = u::comp(u::ref(cat), {bound, u::proj(m, j)});

    UDef g = tr(d->kids[0], {k - 1, sig.safe});
    Sig hs{k, sig.safe + 1};
    switch (d->op) {
      case SOp::PRN:
        return u::brn(g, tr(d->kids[1], hs), tr(d->kids[2], hs), bound);
      case SOp::PPR:
        return u::bpr(g, tr(d->kids[1], hs), bound);
      default:
        return u::mbpr(g, tr(d->kids[1], hs), bound);
    }
  }

  const DefTable& src_;
  DefTable& out_;
  SortedBounds bounds_;
};

template <typename Node>
bool monotoneFree(const std::shared_ptr<const Node>& d, const DefTable& table,
                  std::map<std::string, bool>& seen);

bool monotoneFreeEntry(const std::string& name, const DefTable& table,
                       std::map<std::string, bool>& seen) {
  auto it = seen.find(name);
  if (it != seen.end()) return it->second;
  const Definition& d = table.resolve(name);
  bool r = d.isSorted() ? monotoneFree(d.sorted().body, table, seen)
                        : monotoneFree(d.unsorted().body, table, seen);
  seen[name] = r;
  return r;
}

template <typename Node>
bool monotoneFree(const std::shared_ptr<const Node>& d, const DefTable& table,
                  std::map<std::string, bool>& seen) {
  if constexpr (std::is_same_v<Node, UNode>) {
    if (d->op == UOp::MBPR) return false;
    if (d->op == UOp::Ref) return monotoneFreeEntry(d->name, table, seen);
  } else {
    if (d->op == SOp::MPPR) return false;
    if (d->op == SOp::Ref) return monotoneFreeEntry(d->name, table, seen);
  }
  for (const auto& k : d->kids) {
    if (!monotoneFree(k, table, seen)) return false;
  }
  return true;
}

}  // namespace

DefTable sortedToUnsorted(const DefTable& src) {
  checkTable(src);
  DefTable out;
  ToUnsorted tr(src, out);
  for (const Definition& d : src) {
    if (!d.isSorted()) {
      out.add(d);
      continue;
    }
    const SortedEntry& e = d.sorted();
    UDef body = tr.tr(e.body, e.sig);
    out.addUnsorted(d.name, e.sig.total(), body);
  }
  return out;
}

DefTable unsortedToSorted(const DefTable& src) {
  checkTable(src);
  DefTable out;
  ToSorted tr(src, out);
  for (const Definition& d : src) {
    if (d.isSorted()) {
      out.add(d);
      continue;
    }
    const UnsortedEntry& e = d.unsorted();
    SDef body = tr.normal(e.body, e.arity);
    out.addSorted(d.name, {e.arity, 0}, body);
  }
  return out;
}

std::vector<bool> dependencies(const UDef& def, std::size_t arity, const DefTable& table) {
  return Dependencies(table).of(def, arity);
}

bool isMonotoneFree(const DefTable& table, const std::string& name) {
  std::map<std::string, bool> seen;
  return monotoneFreeEntry(name, table, seen);
}

void addTPlus(DefTable& table, const std::string& name, UDef t, std::size_t arity) {
  const std::size_t m = arity;
  const std::size_t n = m - 1;
  // g(x) = t(eps, x)
  UDef g = u::comp(n, t, join({u::comp(n, u::eps(), {})}, projs(n, 1, n)));
  // h(z, x, prev) = longer(t(z', x), prev)
  UDef next = u::comp(t, join({u::comp(u::ref(importHelper(table, "__nsucc")), {u::proj(m + 1, 1)})},
                              projs(m + 1, 2, m)));
  UDef h = u::comp(u::ref(importHelper(table, "__longer")), {next, u::proj(m + 1, m + 1)});
  // Every value is some t(z', x) with |z'| <= |z| + 1.
  std::vector<BoundPoly> at{BoundPoly::variable(m, 0) + BoundPoly::constant(m, 1)};
  for (std::size_t j = 1; j < m; ++j) at.push_back(BoundPoly::variable(m, j));
  BoundPoly q = lengthBound(t, table).substitute(at);
  UDef bound = polyToDef(q, m, importHelper(table, "__cat"));
  table.addUnsorted(name, m, u::bpr(g, h, bound));
}

UDef mbprAsBpr(UDef mbpr, std::size_t arity, DefTable& table, const std::string& name) {
  const std::size_t m = arity;
  const UDef& g = mbpr->kids[0];
  const UDef& h = mbpr->kids[1];
  const UDef& t = mbpr->kids[2];
  std::string tplus = name + "__tplus";
  if (!table.contains(tplus)) addTPlus(table, tplus, t, m);
  // v = h(z, x, prev)|t(z, x); keep v when prev is below it.
  UDef tz = u::comp(t, projs(m + 1, 1, m));
  UDef v = u::comp(u::ref(importHelper(table, "__trunc")), {h, tz});
  UDef prev = u::proj(m + 1, m + 1);
  UDef chi = u::comp(u::ref(importHelper(table, "__chi_preceq")), {prev, v});
  UDef hm = u::comp(u::caseQ(), {chi, v, v, prev});
  return u::bpr(g, hm, u::ref(tplus));
}

}  // namespace phalg
