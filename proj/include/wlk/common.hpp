#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wlk {

// Exact integer type for series coefficients and Milnor values. Magnus
// coefficients of long Chen-evaluated words overflow 64 bits at modest q.
using Int = boost::multiprecision::cpp_int;

// Input that fails syntactic or structural validation.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal self-check failed (oracle mismatch, certification failure).
// Always indicates a bug in this library, never bad user input.
struct certification_error : std::logic_error {
  explicit certification_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace wlk
