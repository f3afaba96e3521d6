// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage error.
#pragma once

#include <ostream>

namespace circbasis {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circbasis
