#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace algcat {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (point out of range,
/// degree mismatch, element not a member, ...).
class DomainError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// A configured size cap was exceeded.
class ResourceError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// Validation failure of a structure. `witness` holds the offending
/// elements in an order documented by each subclass.
class ValidationError : public AlgebraError {
public:
    ValidationError(const std::string& what, std::vector<int> witness)
        : AlgebraError(what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

}  // namespace algcat
