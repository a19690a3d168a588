#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cmint {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller.
class InputError : public Error {
public:
    using Error::Error;
};

/// CM field input that fails validation. `code` is a stable machine-readable
/// reason, the message is for humans.
class FieldRejected : public Error {
public:
    FieldRejected(std::string code, const std::string& message) : Error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Two independent computations disagree, or a proven bound is violated.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Input too large for the configured arithmetic (precision, factoring).
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace cmint
