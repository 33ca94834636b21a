#ifndef CLFREE_PARSE_HPP
#define CLFREE_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "clfree/polynomial.hpp"

namespace clfree {

// Raised for malformed polynomial text. `offset` is the byte position of the
// first offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Grammar (ASCII, whitespace ignored):
//
//   expr    := [+|-] term { (+|-) term }
//   term    := power { (*|/) power }        divisors must be nonzero constants
//   power   := atom [ ^ uint ]
//   atom    := number [ monomial ] | monomial | ( expr )
//   monomial:= var [ ^ uint ] { var [ ^ uint ] }
//
// Juxtaposition is only allowed inside a monomial and between a leading
// number and a monomial ("5y^2z"); "x(y+z)" and "2(x+y)" are rejected.
// Variable runs such as "xz" are split into single-letter ring variables.
Polynomial parse_poly(std::string_view text, const Ring& ring);

}  // namespace clfree

#endif
