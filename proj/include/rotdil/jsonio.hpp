#pragma once

#include <string>

#include "json.hpp"

namespace rotdil {

// Doubles with 17 significant digits: enough to round-trip any double, and a
// fixed-width choice so identical values always print identically.
std::string format_real(double v);

// Compact canonical JSON: object keys in stored (insertion) order, doubles
// via format_real. parse() of the output followed by dump_canonical() is
// byte-identical.
std::string dump_canonical(const nlohmann::ordered_json& j);

}  // namespace rotdil
