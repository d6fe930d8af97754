#pragma once

#include <iosfwd>

namespace sigma {

// Exit codes: 0 success, 1 validation failure or unusable input, 2 usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigma
