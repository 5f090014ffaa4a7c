#pragma once

// Definition files (.fa): S-expression syntax for both algebras.
//
//   file  := defn*
//   defn  := (defu NAME NAT expr) | (defs NAME (NAT NAT) expr)
//
// Unsorted expressions:
//   eps | (s0) | (s1) | caseq | mul | (proj N J) | (comp g h*) | (lift N g h*)
//   | (brn g h0 h1 t) | (bpr g h t) | (mbpr g h t) | NAME
// Sorted expressions:
//   eps | (s0) | (s1) | (s0b) | (s1b) | binpred | numpred | caseq | mul
//   | (sproj K N I) | (pc g (r*) (s*)) | (spc K N g (r*) (s*))
//   | (prn g h0 h1) | (ppr g h) | (mppr g h) | NAME
//
// `lift` and `spc` carry an explicit arity/signature for composites whose
// shape cannot be read off their arguments (e.g. a constant lifted to a
// positive arity). `;` starts a line comment.

#include <string>
#include <string_view>

#include "phalg/algebra.hpp"

namespace phalg {

DefTable parseFile(std::string_view text);
DefTable loadFile(const std::string& path);

std::string printUnsorted(const UDef& def);
std::string printSorted(const SDef& def);
std::string printDef(const Definition& def);
std::string printTable(const DefTable& table);

}  // namespace phalg
