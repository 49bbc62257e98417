#pragma once

#include <string>
#include <string_view>

#include "pftop/family.hpp"

namespace pftop {

/// Current version of the family document format.
inline constexpr std::string_view kFormatVersion = "1";

/// Reads a family document:
///
///     {"format_version": "1",
///      "universe": ["a", "b"],
///      "sets": [{"name": "K1", "values": {"a": {"mu": "0.25", "rho": "0.10", "sigma": "0.30"}, ...}}]}
///
/// Throws ParseError for malformed JSON (with line and column), SchemaError
/// for missing, unknown or mistyped fields, and ValidationError for bad
/// grades or coverage gaps. A ValidationError keeps the underlying kind in
/// `cause()` and names the set and element.
Family load_family(std::string_view text);

/// Canonical document: two-space indentation, schema key order, members in
/// canonical order, grades as decimal strings. Ends with a newline.
std::string save_family(const Family& family);

}  // namespace pftop
