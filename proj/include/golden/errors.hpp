#pragma once

#include <stdexcept>
#include <string>

namespace golden {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class SeedLengthMismatch : public Error {
public:
    SeedLengthMismatch(std::size_t expected, std::size_t actual)
        : Error("seed vector has " + std::to_string(actual) + " entries, spec degree is " +
                std::to_string(expected)),
          expected_(expected),
          actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Repeated roots: the Binet ansatz needs a simple spectrum.
class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};

/// A closed form would divide by (root - 1).
class DivisionHazard : public Error {
public:
    using Error::Error;
};

/// Singular or near-singular linear system.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double condition_estimate)
        : Error(what), condition_(condition_estimate) {}

    double condition_estimate() const noexcept { return condition_; }

private:
    double condition_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : what + " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace golden
