#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sng {

// Malformed text input (bad cell, ragged row, empty file). Carries the
// 1-based line number when one applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Filesystem-level failure (missing file, unwritable path, truncated stream).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace sng
