#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diverge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad argument, bad range).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Refusal to do work: horizon cap exceeded, 64-bit overflow, n above the
/// capacity limit.
class ResourceError : public Error {
public:
    using Error::Error;
};

class TimeoutError : public ResourceError {
public:
    using ResourceError::ResourceError;
};

/// Malformed construction / graph spec text. `position()` is the 0-based
/// character offset of the offending token for syntax errors, npos for
/// semantic errors.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }
    bool is_syntax() const noexcept { return position_ != std::string::npos; }

private:
    std::size_t position_;
};

} // namespace diverge
