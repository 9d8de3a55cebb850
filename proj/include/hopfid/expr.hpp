#pragma once

#include <string>

#include "hopfid/freealg.hpp"

namespace hopfid {

// Parses the free-algebra expression grammar into a FreeElement over h:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | primary ('^' uint)?
//   primary:= uint ('/' uint)? | 'X' '[' label ']' | '(' expr ')'
// Whitespace insensitive; labels must match h's basis labels; powers expand
// to repeated products. Throws ParseError with 1-based line/column on syntax
// errors and unknown labels, LimitError past the degree limit.
FreeElement parse_expression(const std::string& src, const HopfPtr& h,
                             unsigned degree_limit = FreeElement::kDefaultDegreeLimit);

}  // namespace hopfid
