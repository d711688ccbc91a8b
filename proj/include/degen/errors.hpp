#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// Violated operation precondition (degenerate input, genericity failure,
/// arity mismatch, ...).  CLI layers map this to exit code 2.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomial grammar, JSON schema).  CLI layers map
/// this to exit code 1.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A claimed property failed exact verification: a recipe whose outcome does
/// not match its asserted shape, or a verification run that finds a
/// violation.  CLI layers map this to exit code 3.
struct claim_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace degen
