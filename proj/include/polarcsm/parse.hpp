#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarcsm/mpoly.hpp"

namespace polarcsm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the polynomial grammar: variables x0..x15, integer literals,
/// binary + - *, unary -, ^ with a non-negative integer exponent, and
/// parentheses. Whitespace is ignored; '*' is mandatory between factors.
MPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Exact integer polynomial, as (coefficient, monomial) pairs sorted
/// descending in degrevlex with no zero coefficients.
using IntegerTerms = std::vector<std::pair<std::int64_t, Monomial>>;

/// Same grammar, exact integer coefficients (overflow is a parse error).
IntegerTerms parse_integer_poly(std::string_view text, int n_vars);

}  // namespace polarcsm
