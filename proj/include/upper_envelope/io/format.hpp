#pragma once

#include <string>
#include <string_view>

namespace uenv::io {

/// Shortest decimal that parses back to the same double; integral values
/// keep a trailing ".0" (1 -> "1.0").
std::string format_real(double value);

/// Parses a complete token as a double (surrounding blanks allowed).
/// Returns false on trailing garbage or an empty token; non-finite spellings
/// ("nan", "inf") parse successfully and must be rejected by the caller.
bool parse_real(std::string_view token, double& value);

}  // namespace uenv::io
