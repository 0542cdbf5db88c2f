#pragma once

#include <iosfwd>

namespace subexp {

// Exit codes: 0 success, 2 argument or parse error, 3 refusal (size limit or
// budget). Errors are reported as one JSON object on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subexp
