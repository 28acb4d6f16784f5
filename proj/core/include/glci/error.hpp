#pragma once

#include <stdexcept>
#include <string>

namespace glci {

// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a computed object fails a check that the theory guarantees.
class VerificationFailure : public std::runtime_error {
public:
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glci
