#pragma once

#include <stdexcept>
#include <string>

namespace chlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments (maps to CLI usage errors, exit 64).
struct ArgumentError : Error {
  using Error::Error;
};

// An atom fell outside the domain of a partial permutation.
struct DomainError : Error {
  using Error::Error;
};

// A configured size/universe bound was exceeded. `computed_size` carries the
// size that tripped the bound when it is known.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg, std::uint64_t computed_size = 0)
      : Error(msg), computed_size(computed_size) {}
  std::uint64_t computed_size = 0;
};

// An oracle violated one of its contracts (injectivity, stability).
struct OracleError : Error {
  using Error::Error;
};

// Two models cannot be amalgamated (conflicting or colliding assignments).
struct AmalgamationError : Error {
  using Error::Error;
};

// A "cannot happen" situation guarded by a counting argument actually
// happened; the message carries the round table.
struct InternalInvariantError : Error {
  using Error::Error;
};

// The marker-based case table of the ordered model could not separate a
// degenerate input.
struct TableGapError : Error {
  using Error::Error;
};

}  // namespace chlab
