#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankforge {

/// Runs the rankforge command line. args excludes the program name.
/// Exit codes: 0 success, 1 verification false / certificate below target,
/// 2 usage error, 3 internal invariant break.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankforge
