#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plateau {

// Syntax failure while reading a text form; `position` is the 0-based
// offset of the offending character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A syntactically well-formed value that violates an object invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace plateau
