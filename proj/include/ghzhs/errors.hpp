#pragma once

#include <stdexcept>
#include <string>

namespace ghzhs {

// Numeric invariant violation on otherwise well-formed data (non-Hermitian
// matrix, trace away from 1, ...). The CLI maps this to exit code 3.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; carries the 1-based line number. CLI exit code 2.
class FormatError : public std::runtime_error {
  public:
    FormatError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Unreadable or unwritable file. CLI exit code 4.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghzhs
