#ifndef QV_ERRORS_HPP
#define QV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance does not match the schema of the requested operation/identity.
struct SchemaError : Error {
    using Error::Error;
};

// A printed denominator vanishes (or an exact division by zero was trapped).
struct PoleError : Error {
    using Error::Error;
};

// Parameter outside the numeric backend's domain (e.g. |q| >= 1).
struct DomainError : Error {
    using Error::Error;
};

// A truncated series failed its ratio test / tail-bound requirement.
struct ConvergenceError : Error {
    using Error::Error;
};

} // namespace qv

#endif
