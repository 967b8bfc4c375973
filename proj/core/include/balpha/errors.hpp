#pragma once

#include <stdexcept>
#include <string>

namespace balpha {

// Edge-list text could not be parsed. line() is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A graph lacks the structure an operation quantifies over (e.g. no pendant vertices).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem's hypotheses exclude the requested parameters (e.g. alpha = 1/2).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative method did not converge, or a result failed its certificate.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree analytically disagreed beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace balpha
