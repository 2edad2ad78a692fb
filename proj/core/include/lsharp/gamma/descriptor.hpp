#pragma once

#include <string>

#include "lsharp/gamma/gamma_factor.hpp"

namespace lsharp {

/// γ-factor descriptor:
///   { "Q": {"u":"1","v":-2} | {"numeric":"0.318..."},
///     "factors": [{"lambda":"1/2","mu":{"re":"0","im":"0"}}, ...],
///     "omega": {"re":"1","im":"0"} }
/// "p/q" strings are exact; decimal strings are read at the working precision.
/// Errors are ParseError with line and column.
GammaFactor parse_descriptor(const std::string& json_text);
GammaFactor load_descriptor(const std::string& path);

/// Inverse of parse_descriptor; exact fields round-trip bit for bit.
std::string serialize_descriptor(const GammaFactor& g, const std::string& name = {});

}  // namespace lsharp
