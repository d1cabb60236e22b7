#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Thrown when an operation requires integer matrix entries.
struct NonIntegralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Coset enumeration exceeded its frontier cap: either the input does not
// commensurate the group or the cap is too small.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInGroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotInCosetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedError : std::logic_error {
  using std::logic_error::logic_error;
};

struct BadDeterminantError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadReductionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hecke
