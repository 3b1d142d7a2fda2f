#pragma once

#include <stdexcept>
#include <string>

namespace dualwave {

/// Bad input: violated precondition or malformed parameter. The message
/// names the offending field or key.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed file content. Carries the byte offset of the first bad byte.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A numerical contract was violated at runtime (norm drift, degenerate
/// fit, non-finite samples).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dualwave
