#pragma once

#include <stdexcept>
#include <string>

#include "starq/polynomial.hpp"
#include "starq/varset.hpp"

namespace starq {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
  std::size_t pos;
};

// Grammar: integers, rationals a/b, declared variables, + - * ^ ( ),
// standard precedence, ^ nonassociative with a positive integer exponent.
// Multiplication is always explicit.
Polynomial parse_poly(const std::string& expr, const VarSet& vars);

}  // namespace starq
