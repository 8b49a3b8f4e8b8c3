#pragma once

#include <stdexcept>
#include <string>

namespace gaptopo {

// Caller broke a precondition (bad flip index, goal passed where a non-goal
// is required, non-normalized input to the classifier, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Request exceeds a size limit (enumeration cap, oracle table cap).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed permutation text. token() names the offending piece of input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::string token)
        : std::invalid_argument(what), token_(std::move(token)) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

// A search that the theory says must succeed did not. These are findings,
// never expected in practice, and must surface to the caller.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gaptopo
