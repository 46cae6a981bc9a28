#pragma once

#include <iosfwd>

namespace sextic {

/// Full command-line surface. Returns the process exit code:
///   0  success (and, for check/search, agreement with the oracle)
///   1  oracle disagreement or internal inconsistency
///   2  usage, range, or capacity error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sextic
