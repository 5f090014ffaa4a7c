#pragma once

// Translations between the bounded algebra [I; C, BRN, BPR, MBPR] and the
// sorted algebra [B; PC, PRN, PPR, MPPR], both preserving extension.

#include <string>
#include <vector>

#include "phalg/algebra.hpp"

namespace phalg {

// Sorted entries (k;n) become unsorted definitions of arity k+n, normal
// arguments first. Unsorted entries are copied. Helper definitions ("__"
// names) are placed before their first user.
DefTable sortedToUnsorted(const DefTable& src);

// Unsorted entries of arity m become sorted definitions with signature
// (m;0). Sorted entries are copied. Subterms that depend on recursion values
// are simulated by variants "name__s_<mask>" that take the dependent
// arguments in safe positions, plus a clock as last normal argument whose
// length bounds all intermediate values.
DefTable unsortedToSorted(const DefTable& src);

// Argument positions an unsorted definition syntactically depends on.
std::vector<bool> dependencies(const UDef& def, std::size_t arity, const DefTable& table);

// False if the named entry uses MBPR or MPPR, directly or through references.
bool isMonotoneFree(const DefTable& table, const std::string& name);

// Adds the definition `name` of t+, the running length maximum of t over its
// first argument, to `table`. t has the given arity and only references
// entries of `table`.
void addTPlus(DefTable& table, const std::string& name, UDef t, std::size_t arity);

// BPR(g, (h|t)^m, t+) for an MBPR node of the given arity, with the monotone
// section computed by chi_preceq. Helpers and the t+ definition (named
// `name` + "__tplus") are added to `table`.
UDef mbprAsBpr(UDef mbpr, std::size_t arity, DefTable& table, const std::string& name);

}  // namespace phalg
