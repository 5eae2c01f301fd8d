#pragma once

#include <stdexcept>

namespace lrx {

// Precondition violation: bad degree, out-of-range position, mismatched sizes.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Refusal to start work that would exceed a degree cap or the memory budget.
// Raised before any large allocation happens.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word builder failed its own validation-by-application. Always a bug,
// never a recoverable condition.
class construction_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// File I/O failure; the message carries the path involved.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lrx
