#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs of incompatible sizes (generator counts, vector lengths, ...).
struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// Parameter outside its documented domain (bad label, bad real index, ...).
struct invalid_argument : error {
  explicit invalid_argument(const std::string& what) : error(what) {}
};

// A structural guarantee of the library failed to hold; indicates a bug or an
// input that violates a precondition that cannot be checked cheaply.
struct invariant_violation : error {
  explicit invariant_violation(const std::string& what) : error(what) {}
};

// Text that failed to parse (scalars, polyform literals, CLI documents).
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace cliff
