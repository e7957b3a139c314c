#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poledefect {

/// Malformed expression or term-list input. position() is a byte offset into
/// the original text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Exponent left the range [0, 2^31 - 1].
class ExponentOverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class NonHomogeneousError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ZeroPolynomialError : public std::domain_error {
public:
    ZeroPolynomialError() : std::domain_error("zero polynomial has no degree") {}
};

class WrongVariableCountError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The exact rank engine refused or aborted a matrix that exceeds its budget.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ih_report was called without the local vanishing-cohomology dimensions.
class MissingLocalDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace poledefect
