#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Expression / system-file syntax errors. `position` is a 1-based character
// offset into the parsed text; `line` is 0 unless a file parser sets it.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    ParseError(std::size_t line, std::size_t position, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", position " +
                std::to_string(position) + ": " + what),
          position_(position), line_(line) {}
    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t position_ = 0;
    std::size_t line_ = 0;
};

// Input polynomial mixes two degrees; both are reported.
class NonHomogeneousError : public Error {
public:
    NonHomogeneousError(int degree_a, int degree_b)
        : Error("non-homogeneous input (degrees " + std::to_string(degree_a) + " and " +
                std::to_string(degree_b) + ")"),
          degree_a_(degree_a), degree_b_(degree_b) {}
    int degree_a() const noexcept { return degree_a_; }
    int degree_b() const noexcept { return degree_b_; }

private:
    int degree_a_;
    int degree_b_;
};

class DegreeError : public Error {
public:
    explicit DegreeError(const std::string& what) : Error(what) {}
};

class VarSpaceError : public Error {
public:
    explicit VarSpaceError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
};

// Downstream operations refuse non-complete-intersection input with the first
// degree where the quotient dimension exceeds the complete-intersection value.
class NotCompleteIntersectionError : public Error {
public:
    explicit NotCompleteIntersectionError(int first_failure_degree)
        : Error("system is not a 0-dimensional complete intersection (first failure at degree " +
                std::to_string(first_failure_degree) + ")"),
          first_failure_degree_(first_failure_degree) {}
    int first_failure_degree() const noexcept { return first_failure_degree_; }

private:
    int first_failure_degree_;
};

// A structural invariant that cannot fail on valid input did fail; always a bug.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what)
        : Error("invariant violation: " + what) {}
};

}  // namespace lefschetz
