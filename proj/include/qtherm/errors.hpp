#pragma once

#include <stdexcept>
#include <string>

namespace qtherm {

// Base type for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments or malformed input files (CLI exit code 2).
struct InvalidInput : Error {
    using Error::Error;
};

// Physics guards: integrator stability limit, unsupported population
// inversion, degenerate steady states, state-invariant violations
// (CLI exit code 3).
struct PhysicsGuard : Error {
    using Error::Error;
};

// A thermodynamic bound that must hold for every valid input failed.
// Seeing this means a bug, not bad data (CLI exit code 4).
struct BoundViolation : Error {
    using Error::Error;
};

}  // namespace qtherm
