#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlag {

// Base for every error raised by the library. The CLI maps all of these
// to exit status 2 except ResourceLimitError, which carries the name of the
// exceeded limit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UniformityMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidParametersError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// growth_step on a weighting where the polynomial vanishes.
class ZeroValueError : public Error {
public:
    using Error::Error;
};

class DegenerateWeightingError : public Error {
public:
    using Error::Error;
};

class ResourceLimitError : public Error {
public:
    ResourceLimitError(std::string limit, const std::string& what)
        : Error(what), limit_(std::move(limit)) {}

    const std::string& limit() const noexcept { return limit_; }

private:
    std::string limit_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hlag
