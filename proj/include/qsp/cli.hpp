#pragma once

#include <iosfwd>

namespace qsp {

// Exit codes: 0 success, 1 domain errors (separation, capacity, parse, ...),
// 2 usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qsp
