#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tlab {

/// Malformed arguments: dimension mismatches, zero vectors, bad shapes.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// The induced metric failed the positive-definiteness (spacelike) check.
/// Carries the offending smallest eigenvalue and, when known, the base point.
class NotSpacelikeError : public std::runtime_error {
public:
    NotSpacelikeError(double lambda_min, std::vector<double> location, const std::string& what)
        : std::runtime_error(what), lambda_min_(lambda_min), location_(std::move(location)) {}

    double lambda_min() const { return lambda_min_; }
    const std::vector<double>& location() const { return location_; }

private:
    double lambda_min_;
    std::vector<double> location_;
};

/// Expression text that does not conform to the grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Out-of-domain evaluation (ln of a non-positive value, division by zero, ...).
/// Carries the printed form of the offending subexpression when available.
class EvalDomainError : public std::runtime_error {
public:
    explicit EvalDomainError(const std::string& message, std::string subexpression = {})
        : std::runtime_error(subexpression.empty() ? message
                                                   : message + " in '" + subexpression + "'"),
          message_(message), subexpression_(std::move(subexpression)) {}

    const std::string& message() const { return message_; }
    const std::string& subexpression() const { return subexpression_; }

private:
    std::string message_;
    std::string subexpression_;
};

/// Jet requested too close to a grid boundary for the finite-difference stencil.
class BoundaryProximityError : public std::runtime_error {
public:
    explicit BoundaryProximityError(const std::string& what) : std::runtime_error(what) {}
};

/// Newton backtracking underflowed while trying to keep the iterate spacelike.
class DegenerateSolutionError : public std::runtime_error {
public:
    explicit DegenerateSolutionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tlab
