#pragma once

#include <stdexcept>
#include <string>

namespace specband {

// Invalid or inconsistent user input: bad model parameters, malformed
// configs, unsupported modes. CLI maps these to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary-mode misuse, e.g. requesting a periodic window of an
// aperiodic point.
struct mode_error : config_error {
    using config_error::config_error;
};

// Index outside the supported evaluation range of a point.
struct range_error : config_error {
    using config_error::config_error;
};

// Request exceeds a declared resource cap (grid too large, window set
// explosion).
struct resource_error : config_error {
    using config_error::config_error;
};

// Numerical failure: eigensolver non-convergence and the like. CLI maps
// these to exit code 3.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact interval test could not decide a symbol. Raised instead of
// guessing; indicates insufficient precision in the supplied data.
struct precision_error : numerical_error {
    using numerical_error::numerical_error;
};

}  // namespace specband
