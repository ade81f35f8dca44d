#pragma once

#include <stdexcept>
#include <string>

namespace gratuity {

/// A parameter lies outside its mathematical domain (fraction outside [0,1),
/// non-positive amount, zero installments, ...). `field()` names the offending
/// parameter so front ends can report it.
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string field, std::string message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)),
          message_(std::move(message)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }
    /// The message without the field name.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::string field_;
    std::string message_;
};

/// Malformed request or scenario (missing sections, bad format tag, bad range).
class ValidationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Root-finder could not bracket or converge.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gratuity
