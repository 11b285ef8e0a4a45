#pragma once

#include <iosfwd>

namespace nary {

// Exit codes: 0 success, 1 identity failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nary
