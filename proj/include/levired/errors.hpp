#pragma once

#include <stdexcept>
#include <string>

namespace levired {

/// Malformed or out-of-contract input (CLI exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was hit; the computation was refused (exit status 3).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of a reduction operation does not hold for the given data.
class PreconditionFailed : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed (e.g. Schubert positivity).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace levired
