#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crged {

enum class ErrorCategory : std::uint8_t { Validation, Parse, Resource, Io, Usage };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

/// An argument is outside the domain an operation accepts.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorCategory::Validation, what) {}
};

/// A p value lies outside the interval on which a closed-form edit distance is known.
class TheoremRangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCategory::Parse, what) {}
};

/// Input size or search effort exceeded a configured budget. Never a silent "no".
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorCategory::Resource, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCategory::Io, what) {}
};

} // namespace crged
