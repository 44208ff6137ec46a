#ifndef RANKEVAL_ERRORS_HPP
#define RANKEVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankeval {

/// Malformed or out-of-contract arguments (empty lists, bad parameters, ...).
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A hypothesis does not cover exactly the ids of its reference list.
class HypothesisMismatch : public std::runtime_error {
 public:
  explicit HypothesisMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

/// Input file could not be parsed. Carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Exhaustive enumeration was requested for an instance above the hard cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  explicit InstanceTooLarge(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rankeval

#endif  // RANKEVAL_ERRORS_HPP
