#pragma once

#include <stdexcept>
#include <string>

namespace siet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad symbol, bad rule file, bad flag value).
struct InputError : Error {
  using Error::Error;
};

// A configured search bound was hit before a conclusive answer.
struct CapExceeded : Error {
  CapExceeded(std::string cap, const std::string& what)
      : Error(what), cap_id(std::move(cap)) {}
  std::string cap_id;
};

// A boundary point left the sign-pure regime under a transform. This is the
// point excluded from the recoded subshift, not a programming error.
struct ExcludedPointError : Error {
  using Error::Error;
};

// An infinite-word generator failed to extend its buffer.
struct MalformedGeneratorError : Error {
  using Error::Error;
};

// Two interval lengths agreed within tolerance during numeric induction,
// which signals a Keane-condition violation.
struct ConnectionError : Error {
  using Error::Error;
};

// Integer overflow in incidence-matrix arithmetic.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace siet
