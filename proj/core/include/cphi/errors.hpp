#pragma once

#include <stdexcept>

namespace cphi {

/* Raised when a caller violates an operation's preconditions (bad modulus,
 * residue out of range, mismatched operands, ...).  The command line tool
 * maps this to exit code 2; anything else that escapes is an internal error. */
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cphi
