#pragma once

#include <stdexcept>
#include <string>

namespace ucx {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: ParseError/ConfigError -> 2, DimensionError -> 3,
// DecodeError/ValidationError -> 4, InternalError -> 70.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files or config values.
struct ParseError : Error {
    using Error::Error;
};

// Shape mismatches: wrong matrix dimensions, mismatched qubit counts.
struct DimensionError : Error {
    using Error::Error;
};

// Semantic validation failures: non-unitary matrices, non-normalized states,
// non-orthonormal basis inputs, invalid program fields, Kraft violations.
struct ValidationError : Error {
    using Error::Error;
};

// Bit streams that do not parse as a program or codeword.
struct DecodeError : Error {
    using Error::Error;
};

// Unusable run configuration, e.g. an enumeration budget below the baseline
// program length.
struct ConfigError : Error {
    using Error::Error;
};

// Internal consistency failures that indicate a bug or a tolerance breakdown,
// not bad user input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ucx
