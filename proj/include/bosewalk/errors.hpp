#pragma once
// Error taxonomy. Invalid inputs and malformed text raise ValidationError;
// solver breakdowns (residuals, NaN, convergence) raise NumericalError.
// The CLI maps them to exit codes 2 and 3.

#include <stdexcept>
#include <string>

namespace bosewalk {

class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bosewalk
