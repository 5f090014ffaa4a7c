#pragma once

// ASTs for the two function algebras over binary words:
//
//  * the bounded (Cobham-style) algebra [I; C, BRN, BPR, MBPR] of
//    unsorted functions f(x1, ..., xn), and
//  * the two-sorted predicative algebra [B; PC, PRN, PPR, MPPR] of
//    functions f(x1..xk; y1..yn) with k normal and n safe arguments.
//
// Nodes are immutable and shared. Named definitions live in a DefTable and
// are referenced by name.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "phalg/errors.hpp"
#include "phalg/word.hpp"

namespace phalg {

enum class UOp { Eps, Succ, Proj, CaseQ, Mul, Comp, BRN, BPR, MBPR, Ref };

struct UNode;
using UDef = std::shared_ptr<const UNode>;

struct UNode {
  UOp op;
  // Proj: n. Comp: the arity of the composite. Unused otherwise.
  std::size_t arity = 0;
  // Proj: 1-based index j.
  std::size_t index = 0;
  Bit bit = Bit::Zero;
  // Comp: g, h1..hr. BRN: g, h0, h1, t. BPR/MBPR: g, h, t.
  std::vector<UDef> kids;
  std::string name;
  // Comp built with an explicit arity (see u::comp overloads).
  bool explicitArity = false;
};

namespace u {
UDef eps();
UDef succ(Bit b);
UDef proj(std::size_t n, std::size_t j);
UDef caseQ();
UDef mul();
// Composition; the arity is taken from the (nonempty) hs.
UDef comp(UDef g, std::vector<UDef> hs);
// Composition with an explicit arity; the only way to lift a zero-ary g.
UDef comp(std::size_t arity, UDef g, std::vector<UDef> hs);
UDef brn(UDef g, UDef h0, UDef h1, UDef t);
UDef bpr(UDef g, UDef h, UDef t);
UDef mbpr(UDef g, UDef h, UDef t);
UDef ref(std::string name);
}  // namespace u

struct Sig {
  std::size_t normal = 0;
  std::size_t safe = 0;
  std::size_t total() const { return normal + safe; }
  friend bool operator==(const Sig&, const Sig&) = default;
};

std::string toString(const Sig& s);

enum class SOp {
  Eps,
  Proj,
  SuccNormal,
  SuccBounded,
  BinPred,
  NumPred,
  CaseQ,
  Mul,
  PC,
  PRN,
  PPR,
  MPPR,
  Ref
};

struct SNode;
using SDef = std::shared_ptr<const SNode>;

struct SNode {
  SOp op;
  // Proj: (k;n). PC: the signature of the composite.
  Sig sig;
  std::size_t index = 0;
  Bit bit = Bit::Zero;
  // PC: g, r1..ra, s1..sb with a == numNormal. PRN: g, h0, h1. PPR/MPPR: g, h.
  std::vector<SDef> kids;
  std::size_t numNormal = 0;
  std::string name;
  // PC built with an explicit signature.
  bool explicitSig = false;

  // PC accessors.
  std::size_t numSafe() const { return kids.size() - 1 - numNormal; }
};

namespace s {
SDef eps();
SDef proj(std::size_t k, std::size_t n, std::size_t i);
SDef succNormal(Bit b);
SDef succBounded(Bit b);
SDef binPred();
SDef numPred();
SDef caseQ();
SDef mul();
// Predicative composition; the signature is inferred from rs/ss. With ss
// empty the safe count is 0; use the explicit overload otherwise.
SDef pc(SDef g, std::vector<SDef> rs, std::vector<SDef> ss);
SDef pc(Sig sig, SDef g, std::vector<SDef> rs, std::vector<SDef> ss);
SDef prn(SDef g, SDef h0, SDef h1);
SDef ppr(SDef g, SDef h);
SDef mppr(SDef g, SDef h);
SDef ref(std::string name);
}  // namespace s

// True when the PC signature cannot be read back from its components.
bool pcNeedsExplicitSig(const SNode& n);
// True when the Comp arity cannot be read back from its components.
bool compNeedsExplicitArity(const UNode& n);

bool equal(const UDef& a, const UDef& b);
bool equal(const SDef& a, const SDef& b);

struct UnsortedEntry {
  UDef body;
  std::size_t arity;
};

struct SortedEntry {
  SDef body;
  Sig sig;
};

struct Definition {
  std::string name;
  std::variant<UnsortedEntry, SortedEntry> def;

  bool isSorted() const { return std::holds_alternative<SortedEntry>(def); }
  const UnsortedEntry& unsorted() const { return std::get<UnsortedEntry>(def); }
  const SortedEntry& sorted() const { return std::get<SortedEntry>(def); }
};

// Insertion-ordered definitions. Definitions may only refer to earlier
// names; checkTable enforces this.
class DefTable {
 public:
  // Throws Error on a duplicate name.
  void add(Definition def);
  void addUnsorted(std::string name, std::size_t arity, UDef body);
  void addSorted(std::string name, Sig sig, SDef body);

  const Definition& resolve(const std::string& name) const;  // UnknownSymbol
  const Definition* find(const std::string& name) const;
  std::optional<std::size_t> position(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  std::size_t size() const { return defs_.size(); }
  bool empty() const { return defs_.empty(); }
  const Definition& operator[](std::size_t i) const { return defs_[i]; }
  auto begin() const { return defs_.begin(); }
  auto end() const { return defs_.end(); }

 private:
  std::vector<Definition> defs_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool equal(const DefTable& a, const DefTable& b);

// Returns the arity of `def`, or throws SortError. Refs are resolved against
// the declared arities in `table`.
std::size_t checkUnsorted(const UDef& def, const DefTable& table,
                          const std::string& path = "");
Sig checkSorted(const SDef& def, const DefTable& table, const std::string& path = "");

// Checks every entry against its declaration, allowing references to
// earlier entries only.
void checkTable(const DefTable& table);

}  // namespace phalg
