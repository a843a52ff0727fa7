#pragma once

#include <string>
#include <string_view>

#include "qadhm/qspacetime/ncpoly.hpp"

namespace qadhm::io {

// Chart I expressions, e.g. "x11*x22 - q^2*x12*x21 + 3*det^2".
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*        juxtaposition multiplies too
//   factor := atom ['^' int]                negative powers only for q
//   atom   := int | 'q' | x11 | x12 | x21 | x22 | det | '(' expr ')'
//
// Products keep their order: the algebra is noncommutative.
NCPoly parse_expr(std::string_view src);

extern const char* const kExprGrammar;

}  // namespace qadhm::io
