#pragma once

#include <stdexcept>
#include <string>

namespace densesf {

// Bad user-supplied data: malformed files, out-of-range ids, invalid flags.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented algorithm precondition does not hold (e.g. density too low).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An exact routine was asked to handle an instance beyond its size caps.
struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed at runtime; indicates a bug or an input that
// slipped past a precondition check.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace densesf
