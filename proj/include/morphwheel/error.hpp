#pragma once

#include <stdexcept>
#include <string>

namespace morphwheel {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (negative length,
/// angle beyond the supported envelope, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The inputs are well-formed but no design satisfies the request.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Raised while reading a configuration document.
class ConfigError : public Error {
public:
    ConfigError(std::string field, int line, const std::string& message)
        : Error(format(field, line, message)), field_(std::move(field)), line_(line) {}

    /// Dotted key path the error refers to; empty when not attributable.
    const std::string& field() const { return field_; }
    /// 1-based line number, or 0 when unknown.
    int line() const { return line_; }

private:
    static std::string format(const std::string& field, int line, const std::string& message) {
        std::string out = "config error";
        if (line > 0) out += " at line " + std::to_string(line);
        if (!field.empty()) out += " [" + field + "]";
        return out + ": " + message;
    }

    std::string field_;
    int line_;
};

} // namespace morphwheel
