#pragma once

#include <stdexcept>

namespace asymstream {

// Unreadable or unwritable input source.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was broken by the caller: push after a terminal
// state, rewind of a non-replayable stream, meter balance below zero.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace asymstream
