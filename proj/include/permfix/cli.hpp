#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permfix {

/// Runs one CLI invocation (arguments exclude the program name) against the
/// given streams. Returns the process exit code: 0 on success, 1 on usage or
/// computation errors, 2 when a requested verification fails (a divisibility
/// violation, an invalid certificate, or an unrepresentable target).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permfix
