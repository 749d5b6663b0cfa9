#pragma once

#include <stdexcept>
#include <string>

namespace logsine {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical routine produced a non-finite value or failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series ran out of its term budget. Carries the partial sum reached.
class BudgetExceeded : public NumericError {
public:
    BudgetExceeded(const std::string& what, double partial_re, double partial_im,
                   long terms)
        : NumericError(what), partial_re(partial_re), partial_im(partial_im),
          terms(terms) {}

    double partial_re;
    double partial_im;
    long terms;
};

}  // namespace logsine
