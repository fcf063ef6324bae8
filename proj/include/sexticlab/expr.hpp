#pragma once

#include <string>
#include <string_view>

#include "sexticlab/polyz.hpp"

namespace sexticlab {

/// Parses either a sum of terms
///
///   poly := ['+'|'-'] term (('+'|'-') term)*
///   term := integer ['*'] 'x' ['^' exponent] | 'x' ['^' exponent] | integer
///
/// (whitespace between tokens ignored, repeated powers summed, exponent <= 64)
/// or a bare coefficient list "c0,c1,...,cn". Throws ParseError.
IntPoly parse_poly(std::string_view text);

/// A parsed expression together with its source text.
struct PolyExpr {
  std::string source;
  IntPoly parsed;

  explicit PolyExpr(std::string text) : source(std::move(text)), parsed(parse_poly(source)) {}
};

}  // namespace sexticlab
