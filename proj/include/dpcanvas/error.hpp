#pragma once

#include <stdexcept>
#include <string>

namespace dpcanvas {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rotation system does not describe a simple plane embedding.
class EmbeddingError : public Error {
public:
    using Error::Error;
};

/// Caller supplied arguments that violate an operation's preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration cap was exceeded.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, unsigned long long requested)
        : Error(what), requested_(requested) {}
    unsigned long long requested() const noexcept { return requested_; }

private:
    unsigned long long requested_;
};

/// Internal consistency check failed. Always a bug, or a counterexample to a
/// result the code relies on; never an expected outcome.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace dpcanvas
