#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

/// Malformed user input: bad datum, unparsable element key, unknown class.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (memo entries, recursion nodes, window size) was hit.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Internal consistency failure: exact arithmetic overflow, cache mismatch,
/// a change of basis that leaves a remainder.
class IntegrityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace alcove
