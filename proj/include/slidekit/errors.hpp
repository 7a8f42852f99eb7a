#pragma once

#include <stdexcept>
#include <string>

namespace slidekit {

// Malformed textual input (CLI exit status 2).
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a precondition or invariant (CLI exit status 3).
struct validation_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace slidekit
