#pragma once

#include <iosfwd>

namespace lie {

/// Runs the command-line front end. Data goes to `out` as JSON,
/// diagnostics to `err`. Returns the process exit code: 0 on
/// success/verified, 1 on refuted-or-failed claims and domain errors,
/// 2 on usage or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lie
