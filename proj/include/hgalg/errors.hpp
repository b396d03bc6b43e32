#ifndef HGALG_ERRORS_HPP
#define HGALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgalg {

// Bad parameters or malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size budget.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An operation's mathematical precondition does not hold for the input.
class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hgalg

#endif  // HGALG_ERRORS_HPP
