#pragma once

#include <stdexcept>
#include <string>

namespace ranklss {

/// Base class for every error raised by the library. `kind()` is a short
/// machine-readable tag used by the CLI error payload.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

/// Raised when an input violates the mathematical domain of an operation
/// (log of a nonpositive eigenvalue, c <= 0, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Tied values under the strict tie policy. Carries the first offending row.
struct TieError : Error {
    TieError(std::size_t row_index, const std::string& what)
        : Error("ties", what), row(row_index) {}
    std::size_t row;
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error("convergence", what) {}
};

}  // namespace ranklss
