#include "phalg/prelude.hpp"


#include "phalg/parser.hpp"

namespace phalg {

namespace {

// Helpers for sortedToUnsorted.
constexpr std::string_view kUnsortedHelpers = R"fa(
; S_i(z; x) as an unsorted function: append while |x| < |z|.
(defu __bsucc0 2 (comp caseq (comp __D (proj 2 2) (proj 2 1))
                      (proj 2 2) (comp (s0) (proj 2 2)) (comp (s0) (proj 2 2))))
(defu __bsucc1 2 (comp caseq (comp __D (proj 2 2) (proj 2 1))
                      (proj 2 2) (comp (s1) (proj 2 2)) (comp (s1) (proj 2 2))))

; Numeric predecessor: p(y0) = p(y)1 for nonempty y, p(y1) = y0.
(defu __npred 1 (brn eps
                     (comp caseq (proj 2 1) (lift 2 eps) (comp (s1) (proj 2 2)) (comp (s1) (proj 2 2)))
                     (comp (s0) (proj 2 1))
                     (comp (s1) (proj 1 1))))

; Numeric successor: eps' = 0, (y0)' = y1, (y1)' = (y')0.
(defu __nsucc 1 (brn (comp (s0) eps)
                     (comp (s1) (proj 2 1))
                     (comp (s0) (proj 2 2))
                     (comp (s1) (comp (s1) (proj 1 1)))))

; The longer of two words, ties going to the first.
(defu __longer 2 (comp caseq (comp __D (proj 2 1) (proj 2 2)) (proj 2 1) (proj 2 2) (proj 2 2)))
)fa";

// Helpers for unsortedToSorted. A clock w is a normal argument whose length
// bounds every intermediate value.
constexpr std::string_view kSortedHelpers = R"fa(
(defs __szero (0 0) (pc (s0) (eps) ()))
(defs __sone (0 0) (pc (s1) (eps) ()))

; ncat(x, y;) = xy as a normal value.
(defs __ncatr (2 0)
  (prn (sproj 1 0 1)
       (pc (s0b) ((pc mul ((pc (s1) ((sproj 2 0 2)) ()) (pc (s1) ((pc (s1) ((sproj 2 0 1)) ())) ())) ()))
                 ((sproj 2 1 3)))
       (pc (s1b) ((pc mul ((pc (s1) ((sproj 2 0 2)) ()) (pc (s1) ((pc (s1) ((sproj 2 0 1)) ())) ())) ()))
                 ((sproj 2 1 3)))))
(defs __ncat (2 0) (pc __ncatr ((sproj 2 0 2) (sproj 2 0 1)) ()))

; dsafe(c; y): y without its last |c| bits.
(defs __dsafe (1 1) (prn (sproj 0 1 1) (pc binpred () ((sproj 1 2 3))) (pc binpred () ((sproj 1 2 3)))))

; dn(c, x;): x without its last |c| bits, as a normal value.
(defs __dn (2 0) (prn (sproj 1 0 1) (pc binpred () ((sproj 2 1 3))) (pc binpred () ((sproj 2 1 3)))))

; drops(w; c, x): x without its last min(|c|, |w|) bits.
(defs __drops (1 2)
  (prn (sproj 0 2 2)
       (pc caseq () ((pc __dsafe ((sproj 1 0 1)) ((sproj 1 3 2)))
                     (sproj 1 3 4)
                     (pc binpred () ((sproj 1 3 4)))
                     (pc binpred () ((sproj 1 3 4)))))
       (pc caseq () ((pc __dsafe ((sproj 1 0 1)) ((sproj 1 3 2)))
                     (sproj 1 3 4)
                     (pc binpred () ((sproj 1 3 4)))
                     (pc binpred () ((sproj 1 3 4)))))))

; truncs(w; x, y) = x|y, exact for |x| <= |w|.
(defs __truncs (1 2)
  (pc __drops ((sproj 1 0 1))
      ((pc __drops ((sproj 1 0 1)) ((sproj 1 2 3) (sproj 1 2 2))) (sproj 1 2 2))))

; tcat(w; p, b): p followed by |b| ones, for |p| + |b| <= |w|.
(defs __tcatr (2 2)
  (prn (sproj 1 2 2)
       (pc caseq () ((pc __dsafe ((sproj 2 0 1)) ((sproj 2 3 4)))
                     (sproj 2 3 5)
                     (pc (s1b) ((sproj 2 0 2)) ((sproj 2 3 5)))
                     (pc (s1b) ((sproj 2 0 2)) ((sproj 2 3 5)))))
       (pc caseq () ((pc __dsafe ((sproj 2 0 1)) ((sproj 2 3 4)))
                     (sproj 2 3 5)
                     (pc (s1b) ((sproj 2 0 2)) ((sproj 2 3 5)))
                     (pc (s1b) ((sproj 2 0 2)) ((sproj 2 3 5)))))))
(defs __tcat (1 2) (pc __tcatr ((sproj 1 0 1) (sproj 1 0 1)) ((sproj 1 2 2) (sproj 1 2 3))))

; muls(w; a, b) = 1^(|a||b|) for |a|, |b|, |a||b| <= |w|.
(defs __mulsr (2 2)
  (prn (spc 1 2 eps () ())
       (pc caseq () ((pc __dsafe ((sproj 2 0 1)) ((sproj 2 3 3)))
                     (sproj 2 3 5)
                     (pc __tcat ((sproj 2 0 2)) ((sproj 2 3 5) (sproj 2 3 4)))
                     (pc __tcat ((sproj 2 0 2)) ((sproj 2 3 5) (sproj 2 3 4)))))
       (pc caseq () ((pc __dsafe ((sproj 2 0 1)) ((sproj 2 3 3)))
                     (sproj 2 3 5)
                     (pc __tcat ((sproj 2 0 2)) ((sproj 2 3 5) (sproj 2 3 4)))
                     (pc __tcat ((sproj 2 0 2)) ((sproj 2 3 5) (sproj 2 3 4)))))))
(defs __muls (1 2) (pc __mulsr ((sproj 1 0 1) (sproj 1 0 1)) ((sproj 1 2 2) (sproj 1 2 3))))

; lex(w; z, y): eps if z and y agree on the first min(|z|, |w|) positions,
; 0 if z is below y at the first difference, 1 if above.
(defs __lexstep (2 3)
  (pc caseq ()
      ((sproj 2 3 5)
       (pc caseq ()
           ((pc __dsafe ((sproj 2 0 1)) ((sproj 2 3 3)))
            (spc 2 3 eps () ())
            (pc caseq ()
                ((pc __truncs ((sproj 2 0 2)) ((sproj 2 3 3) (spc 2 3 (s1) ((sproj 2 0 1)) ())))
                 (spc 2 3 eps () ())
                 (pc caseq ()
                     ((pc __truncs ((sproj 2 0 2)) ((sproj 2 3 4) (spc 2 3 (s1) ((sproj 2 0 1)) ())))
                      (spc 2 3 eps () ()) (spc 2 3 eps () ()) (spc 2 3 __szero () ())))
                 (pc caseq ()
                     ((pc __truncs ((sproj 2 0 2)) ((sproj 2 3 4) (spc 2 3 (s1) ((sproj 2 0 1)) ())))
                      (spc 2 3 eps () ()) (spc 2 3 __sone () ()) (spc 2 3 eps () ())))))
            (pc caseq ()
                ((pc __truncs ((sproj 2 0 2)) ((sproj 2 3 3) (spc 2 3 (s1) ((sproj 2 0 1)) ())))
                 (spc 2 3 eps () ())
                 (pc caseq ()
                     ((pc __truncs ((sproj 2 0 2)) ((sproj 2 3 4) (spc 2 3 (s1) ((sproj 2 0 1)) ())))
                      (spc 2 3 eps () ()) (spc 2 3 eps () ()) (spc 2 3 __szero () ())))
                 (pc caseq ()
                     ((pc __truncs ((sproj 2 0 2)) ((sproj 2 3 4) (spc 2 3 (s1) ((sproj 2 0 1)) ())))
                      (spc 2 3 eps () ()) (spc 2 3 __sone () ()) (spc 2 3 eps () ())))))))
       (sproj 2 3 5)
       (sproj 2 3 5))))
(defs __lexr (2 2) (prn (spc 1 2 eps () ()) __lexstep __lexstep))
(defs __lex (1 2) (pc __lexr ((sproj 1 0 1) (sproj 1 0 1)) ((sproj 1 2 2) (sproj 1 2 3))))

; ltnu(w; z, y) = 1 if z comes before y in the dyadic order, eps otherwise;
; exact for |z|, |y| < |w|.
(defs __ltnu (1 2)
  (pc caseq ()
      ((pc __drops ((sproj 1 0 1)) ((sproj 1 2 2) (sproj 1 2 3)))
       (pc caseq ()
           ((pc __drops ((sproj 1 0 1)) ((sproj 1 2 3) (sproj 1 2 2)))
            (pc caseq ()
                ((pc __lex ((sproj 1 0 1)) ((sproj 1 2 2) (sproj 1 2 3)))
                 (spc 1 2 eps () ()) (spc 1 2 __sone () ()) (spc 1 2 eps () ())))
            (spc 1 2 eps () ())
            (spc 1 2 eps () ())))
       (spc 1 2 __sone () ())
       (spc 1 2 __sone () ()))))
)fa";

template <typename Node, typename Op>
std::shared_ptr<const Node> prefixed(const std::shared_ptr<const Node>& d, const std::string& prefix,
                                     Op refOp) {
  bool changed = d->op == refOp;
  std::vector<std::shared_ptr<const Node>> kids;
  for (const auto& k : d->kids) {
    kids.push_back(prefixed<Node>(k, prefix, refOp));
    changed = changed || kids.back() != k;
  }
  if (!changed) return d;
  auto n = std::make_shared<Node>(*d);
  n->kids = std::move(kids);
  if (n->op == refOp) n->name = prefix + n->name;
  return n;
}

void addOrCompare(DefTable& out, Definition d, std::string_view origin) {
  if (const Definition* have = out.find(d.name)) {
    bool same = have->isSorted() == d.isSorted() &&
                (d.isSorted() ? equal(have->sorted().body, d.sorted().body)
                              : equal(have->unsorted().body, d.unsorted().body));
    if (!same) {
      throw Error("stdlib: conflicting definitions of '" + d.name + "' in " + std::string(origin));
    }
    return;
  }
  out.add(std::move(d));
}

DefTable buildHelpers() {
  DefTable out;
  for (std::string_view file : {"truncate.fa", "concat.fa", "chi_preceq.fa"}) {
    for (const Definition& d : stdlibTable(file)) {
      Definition r{"__" + d.name, d.def};
      if (d.isSorted()) {
        r.def = SortedEntry{prefixRefs(d.sorted().body, "__"), d.sorted().sig};
      } else {
        r.def = UnsortedEntry{prefixRefs(d.unsorted().body, "__"), d.unsorted().arity};
      }
      addOrCompare(out, std::move(r), file);
    }
  }
  for (std::string_view text : {kUnsortedHelpers, kSortedHelpers}) {
    for (const Definition& d : parseFile(text)) out.add(d);
  }
  checkTable(out);
  return out;
}

void collectRefs(const UDef& d, std::vector<std::string>& out) {
  if (d->op == UOp::Ref) out.push_back(d->name);
  for (const auto& k : d->kids) collectRefs(k, out);
}

void collectRefs(const SDef& d, std::vector<std::string>& out) {
  if (d->op == SOp::Ref) out.push_back(d->name);
  for (const auto& k : d->kids) collectRefs(k, out);
}

}  // namespace

UDef prefixRefs(const UDef& def, const std::string& prefix) {
  return prefixed<UNode>(def, prefix, UOp::Ref);
}

SDef prefixRefs(const SDef& def, const std::string& prefix) {
  return prefixed<SNode>(def, prefix, SOp::Ref);
}

DefTable stdlibTable(std::string_view file) {
  for (const StdlibSource& s : stdlibSources()) {
    if (s.file == file) {
      DefTable t = parseFile(s.text);
      checkTable(t);
      return t;
    }
  }
  throw Error("no stdlib file '" + std::string(file) + "'");
}

const DefTable& helperTable() {
  static const DefTable table = buildHelpers();
  return table;
}

std::string importHelper(DefTable& out, const std::string& name) {
  if (out.contains(name)) return name;
  const Definition& d = helperTable().resolve(name);
  std::vector<std::string> refs;
  if (d.isSorted()) {
    collectRefs(d.sorted().body, refs);
  } else {
    collectRefs(d.unsorted().body, refs);
  }
  for (const std::string& r : refs) importHelper(out, r);
  if (!out.contains(name)) out.add(d);
  return name;
}

}  // namespace phalg
