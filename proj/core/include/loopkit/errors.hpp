#pragma once

#include <stdexcept>
#include <string>

namespace loopkit {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input. CLI maps this to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An exact identity, oracle comparison or internal consistency check failed.
/// CLI maps this to exit code 3.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Requested work exceeds a configured size cap. CLI maps this to exit code 4.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace loopkit
