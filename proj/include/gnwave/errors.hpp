#pragma once

#include <stdexcept>
#include <string>

namespace gn {

/// Bad user input: malformed config file, invalid mesh bounds, unknown
/// scenario or boundary-condition name. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The computation produced a non-finite or otherwise unusable state
/// (blow-up, negative cell average under the positivity contract,
/// stagnating time step). CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear solver breakdown or residual above tolerance.
struct SolverError : NumericalError {
    using NumericalError::NumericalError;
};

/// Filesystem failure while writing outputs. CLI exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gn
