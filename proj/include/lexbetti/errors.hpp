#ifndef LEXBETTI_ERRORS_HPP
#define LEXBETTI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexbetti {

// Error taxonomy mirrors the CLI exit codes: malformed data is 1, violated
// mathematical preconditions are 2, tripped size guards are 3.

/// Malformed or inconsistent input: bad JSON, negative exponents, length
/// mismatches, generators of degree zero.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented mathematical precondition does not hold: max index of a
/// constant monomial, non-Borel input to a Borel-only routine, inadmissible
/// Hilbert data, unstabilized tails, invalid elementary moves.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configurable size limit was exceeded (Taylor complex generator guard,
/// exhaustive enumeration bounds, 64-bit count overflow).
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lexbetti

#endif
