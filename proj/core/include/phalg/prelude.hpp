#pragma once

// Definitions shipped with the library: the stdlib sources and the internal
// helpers the translations and the compiler emit references to.

#include <span>
#include <string>
#include <string_view>

#include "phalg/algebra.hpp"

namespace phalg {

struct StdlibSource {
  std::string_view file;
  std::string_view text;
};

// Embedded copies of stdlib/*.fa.
std::span<const StdlibSource> stdlibSources();
// Parsed and checked; throws Error for an unknown file name.
DefTable stdlibTable(std::string_view file);

// Helper definitions, all named "__<name>": the stdlib truncation,
// concatenation and chi_preceq definitions (renamed), plus the
// translation helpers. Checked once on first use.
const DefTable& helperTable();

// Copies helper `name` and everything it references into `out`, skipping
// names already present. Returns `name`.
std::string importHelper(DefTable& out, const std::string& name);

// Rewrites every Ref to `name` as `prefix + name`.
UDef prefixRefs(const UDef& def, const std::string& prefix);
SDef prefixRefs(const SDef& def, const std::string& prefix);

}  // namespace phalg
