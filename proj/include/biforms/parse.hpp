#ifndef BIFORMS_PARSE_HPP
#define BIFORMS_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "biforms/mpoly.hpp"

namespace biforms {

// Syntax error, unknown variable or zero denominator while reading a
// polynomial. position() is the byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | variable | '(' expr ')'
// Juxtaposition is rejected; whitespace is ignored between tokens.
MPoly parse_form(std::string_view text, Ring ring);

// Canonical text: terms in descending lex order, e.g. "3/7*X^2*Y - X*Y^2".
// parse_form(to_string(p), p.ring()) == p.
std::string to_string(const MPoly& p);

}  // namespace biforms

#endif  // BIFORMS_PARSE_HPP
