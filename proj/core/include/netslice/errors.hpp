#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netslice {

// Caller passed arguments that violate a documented precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal consistency violated; indicates a bug in the caller or engine.
class LogicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A generator produced a structure that cannot be walked.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An event history or tree does not describe a consistent binary hierarchy.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An observation lies outside the domain of a statistic.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netslice
