#pragma once

#include <stdexcept>
#include <string>

namespace arcc {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: bad ids, mismatched bases, inconsistent patterns.
class rejected_input : public error {
public:
  using error::error;
};

// Signature admits no hexagon decomposition (e.g. nonorientable (1,1)).
// Callers wanting those cases should use explicit_small_model instead.
class unsupported_signature : public rejected_input {
public:
  using rejected_input::rejected_input;
};

// Arc has a unique completion, so there is no flip at it.
class non_flippable : public error {
public:
  using error::error;
};

// transport() was asked to move the flipped arc itself; use the move's
// replacement (forward) or removed (backward) arc instead.
class undefined_transport : public error {
public:
  using error::error;
};

// Enumeration over a window that is a truncation of an infinite complex.
class truncated_window : public rejected_input {
public:
  using rejected_input::rejected_input;
};

class not_connected_in_ball : public error {
public:
  using error::error;
};

class io_error : public error {
public:
  using error::error;
};

// A contract the engine relies on failed; indicates a bug, not bad input.
class internal_error : public error {
public:
  using error::error;
};

} // namespace arcc
