#pragma once

#include <string>

#include "qsp/family.hpp"

namespace qsp {

// Line oriented family file:
//   family <name>
//   x_bits <n>
//   v_bits <m>
//   solution_bits <s>
//   k <bits> : <v(x=0..0)> ... <v(x=1..1)> ; solution <bits>
//   meta h=<bits>            (optional, attaches to the preceding member)
// '#' starts a comment; tokens are whitespace separated. Member order in the
// file is preserved (it fixes the K indexing).
FunctionFamily parse_family(const std::string& text);

std::string serialize_family(const FunctionFamily& family);

FunctionFamily load_family_file(const std::string& path);

} // namespace qsp
