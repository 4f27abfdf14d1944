#pragma once

#include <stdexcept>
#include <string>

namespace eafkit {

/// Failure category. Each maps to exactly one CLI exit code.
enum class ErrorKind {
    Validation,  // bad arguments, contract violations, configuration (exit 1)
    Io,          // unreadable or unwritable paths (exit 2)
    Data,        // malformed or out-of-domain input data (exit 3)
};

int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error(ErrorKind::Validation, message) {}
};

/// A precondition of an operation was broken by the caller (e.g. mixed dimensions).
class ContractViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedDimension : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigurationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error(ErrorKind::Io, message) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& message) : Error(ErrorKind::Data, message) {}
};

/// Structurally malformed file content (ragged runs, bad headers, wrong shapes).
class FormatError : public DataError {
public:
    using DataError::DataError;
};

class VersionError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace eafkit
