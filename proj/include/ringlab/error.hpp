#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text failed to parse; `offset` is the byte position of the failure.
class parse_error : public error {
public:
    parse_error(const std::string& message, std::size_t offset)
        : error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A configured resource limit (cardinality, search budget) was exceeded.
class limit_error : public error {
public:
    using error::error;
};

/// A constructed carrier failed its ring/group axiom verification.
/// Signals a constructor bug, not a user mistake.
class axiom_error : public error {
public:
    using error::error;
};

/// Invalid use of the API: wrong parent ring, malformed arguments, bad element.
class domain_error : public error {
public:
    using error::error;
};

}  // namespace ringlab
