#pragma once

#include <stdexcept>
#include <string>

namespace orbivol {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Argument outside the natural domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// A computation needed an input that is not available.
class DependencyError : public Error {
public:
    using Error::Error;
};

}  // namespace orbivol

namespace orbivol {

// A local computation could not decide its answer within its search budget.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

}  // namespace orbivol
