// ============================================================================
// ltl_parser.hpp — parser for the neutral LTL text syntax
// ============================================================================
//
// Grammar (loosest to tightest; U/R and -> are right-associative):
//
//   expr     := or ('->' expr)?
//   or       := and ('|' and)*
//   and      := until ('&' until)*
//   until    := unary (('U' | 'R' | 'W') until)?
//   unary    := ('!' | 'X' | 'F' | 'G') unary | primary
//   primary  := '(' expr ')' | 'true' | 'false'
//             | ident (('<' | '<=' | '>' | '>=' | '=' | '!=') number)?
//
// The single capital letters X F G U R W are operators, never identifiers.
// Comparisons other than < and = are desugared at parse time:
//   x <= c  ->  x < c | x = c        x > c  ->  !(x < c | x = c)
//   x >= c  ->  !(x < c)             x != c ->  !(x = c)
// `#` starts a comment running to end of line.

#pragma once

#include <string_view>

#include "reqlint/formula.hpp"

namespace reqlint {

// Parses one formula; trailing input (other than whitespace/comments) is an
// error. Throws ParseError with line, column, and the expected-token set.
FormulaId parse_ltl(FormulaFactory& f, std::string_view text);

// Shared desugaring for comparison atoms; `op` is one of < <= > >= = !=.
FormulaId make_comparison(FormulaFactory& f, const std::string& var, std::string_view op,
                          const Rational& constant);

} // namespace reqlint
