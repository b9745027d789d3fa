#ifndef ARBORDIM_PARSER_HPP
#define ARBORDIM_PARSER_HPP

#include <string>

#include "arbordim/ratmap.hpp"

namespace arbordim {

// Expression grammar, version 1:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ('-'? integer))*        (right-associative)
//   atom   := integer | 'x' | 'inf' | '(' expr ')'
// Whitespace is free.  '/' is exact division; literals are integers, so
// rationals are written e.g. "3/2".  'inf' is only valid as a whole point
// expression.  Errors carry a byte offset.
inline constexpr const char *kGrammarVersion = "1";

RationalMap parse_map(const std::string &text);
ProjPoint parse_point(const std::string &text);

} // namespace arbordim

#endif
