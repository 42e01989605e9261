#pragma once

#include <exception>
#include <ostream>
#include <span>
#include <string>

namespace fcost {

/// Entry point behind the `fcost` binary. args excludes the program name.
/// Returns 0 on success, 1 on configuration errors, 2 on internal invariant
/// violations.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Exit code for an escaped exception: 2 for InvariantViolation, 1 otherwise.
/// Writes a one-line diagnostic to err.
int report_failure(std::exception_ptr failure, std::ostream& err);

} // namespace fcost
