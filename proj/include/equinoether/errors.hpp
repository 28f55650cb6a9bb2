#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equinoether {

// A tuple or map violated a structural requirement (repeated entries,
// non-positive indices, source/target collisions, ...).
struct InvalidTuple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operands don't live over the same variable shape / row count / ambient size.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A search or completion hit its configured work bound before finishing.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested combination is outside what this implementation handles.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text input rejected; `position` is a 0-based offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace equinoether
