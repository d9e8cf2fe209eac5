#pragma once

#include <stdexcept>
#include <string>

namespace nqs {

// Bad inputs (shape mismatch, out-of-range parameter, unknown label) raise
// std::invalid_argument. The two types below cover the remaining cases.

// A functional evaluated outside its stated validity domain. The offending
// quantity travels with the exception so callers can report it.
class OutOfDomain : public std::domain_error {
public:
    OutOfDomain(const std::string& what, double value) : std::domain_error(what), value_(value) {}
    double value() const { return value_; }

private:
    double value_;
};

// A computation that is well-posed but numerically degenerate, e.g. a
// filter chain whose success probability underflows.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nqs
