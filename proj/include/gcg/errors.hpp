#pragma once

#include <stdexcept>
#include <string>

namespace gcg {

// Input could not be read or has the wrong shape (bad indices, missing keys).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well formed but fails a semantic requirement or an expectation.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug, never bad input.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gcg
