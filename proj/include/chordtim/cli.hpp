#pragma once

#include <iosfwd>

namespace chordtim::cli {

/// Process exit codes. Scripts rely on these values.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,         // unreadable file, bad JSON, schema or validation failure
  kPrecondition = 3,       // e.g. `certify` on a chordal topology
  kSizeLimit = 4,          // instance above a --max-size cap
  kNotChordal = 10,        // `analyze` / `region` on a non-chordal topology
  kInfeasible = 11,        // no orthogonal-access schedule for the requested rates
  kVerificationFailed = 12,
};

/// Runs one command. JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chordtim::cli
