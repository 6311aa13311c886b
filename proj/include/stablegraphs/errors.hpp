#pragma once

#include <stdexcept>
#include <string>

namespace stablegraphs {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (edge lists, CLI files). Carries a line number where known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structurally invalid input: self-loops, duplicate edges, foreign ids, kind mismatches.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Out-of-range or inconsistent parameters (eps, probabilities, seeds, k).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Input too large for an exact/brute-force code path.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

}  // namespace stablegraphs
