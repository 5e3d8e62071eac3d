#pragma once

#include "algebra/bipoly.hpp"

#include <string_view>

namespace jl {

// Reads transcribed closed forms such as "-4k^6+(-88+12n)k^5+3/8 n^2".
// Variables are single letters; juxtaposition multiplies; division by constants only.
BiPoly parse_bipoly(std::string_view text, char outer = 'k', char inner = 'n');
UPoly parse_upoly(std::string_view text, char var = 'n');

}  // namespace jl
