#pragma once

#include <stdexcept>
#include <string>

namespace quot {

// Bad input: schema violations, parse errors, precondition failures.
// CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical contract was broken at runtime (a normal form that is not
// a multiple of the top class, a self-check that two evaluations agree, ...).
// CLI maps this to exit code 3.
class math_contract_error : public std::runtime_error {
public:
    explicit math_contract_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace quot
