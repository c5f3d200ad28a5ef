#pragma once

#include <stdexcept>
#include <string>

namespace landau {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or precondition violation (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

/// Numerical failure at runtime: NaN, singular system, H-theorem violation (exit code 3).
struct NumericalError : Error {
    using Error::Error;
};

/// Filesystem / serialization failure (exit code 4).
struct IoError : Error {
    using Error::Error;
};

}  // namespace landau
