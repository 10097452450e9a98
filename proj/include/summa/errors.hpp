// Error types shared across the library. Domain violations are always
// reported as exceptions, never as NaN-like sentinel values.
#pragma once

#include <stdexcept>
#include <string>

namespace summa {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Input too close to a pole or zero denominator relative to the working
// precision.
struct SingularInput : DomainError {
    using DomainError::DomainError;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A series failed to meet its tolerance within the configured term budget.
// Carries the best value and tail bound reached, rendered as decimal strings.
struct NonConvergence : std::runtime_error {
    NonConvergence(const std::string& msg, std::string best, std::string bound,
                   long terms_used)
        : std::runtime_error(msg), best_value(std::move(best)),
          best_bound(std::move(bound)), terms(terms_used) {}
    std::string best_value;
    std::string best_bound;
    long terms;
};

} // namespace summa
