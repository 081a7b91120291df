#ifndef WR1_ERRORS_HPP
#define WR1_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wr1 {

// Base for everything caused by bad user input (CLI exit code 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UndeclaredSpecies : public InputError {
public:
    using InputError::InputError;
};

class NegativeExponent : public InputError {
public:
    using InputError::InputError;
};

class DuplicateEquation : public InputError {
public:
    using InputError::InputError;
};

class EmptySystem : public InputError {
public:
    using InputError::InputError;
};

class SchemaError : public InputError {
public:
    using InputError::InputError;
};

class ShapeMismatch : public InputError {
public:
    using InputError::InputError;
};

class DuplicateVertex : public InputError {
public:
    using InputError::InputError;
};

class InvalidGraph : public InputError {
public:
    using InputError::InputError;
};

class MissingRates : public InputError {
public:
    using InputError::InputError;
};

// A proven invariant failed; always a bug, never an input problem.
class InternalInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wr1

#endif  // WR1_ERRORS_HPP
