#pragma once

#include <ostream>

namespace froblab {

/// Entry point of the froblab command line tool. Exit codes: 0 pass,
/// 1 a check failed, 2 bad input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace froblab
