#pragma once

#include <stdexcept>
#include <string>

namespace cadgraph {

// Thrown when a structural guarantee the library relies on fails to hold at
// runtime: a case analysis that should be exhaustive falls through, a
// verified embedding fails its own audit, a decomposition produces a piece
// that violates the counting rule it was derived from.  Reaching this
// exception always indicates a bug in the library (or a caller bypassing a
// documented precondition check), never bad user input; the command-line
// driver maps it to its own dedicated exit code so such failures are
// distinguishable from input errors.
struct InternalInvariantError : std::logic_error {
    explicit InternalInvariantError(const std::string& what_arg)
        : std::logic_error(what_arg) {}
};

}  // namespace cadgraph
