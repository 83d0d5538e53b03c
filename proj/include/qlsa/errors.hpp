#pragma once

#include <stdexcept>
#include <string>

namespace qlsa {

/// Base of every error raised by the estimator.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A value violates a domain invariant. Carries the offending field name.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Caller broke a documented precondition of an operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// No admissible configuration exists. Names the binding constraint.
class InfeasibleError : public Error {
public:
    InfeasibleError(std::string constraint, const std::string& what);
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// An iterative method or an error bound blew up.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Matrix logarithm requested too close to the branch cut.
class BranchAmbiguityError : public Error {
public:
    using Error::Error;
};

/// Requested quantity is not modelled for the given inputs.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (a bug, or a broken invariant upstream).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace qlsa
