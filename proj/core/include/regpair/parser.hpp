#pragma once

#include <string_view>

#include "regpair/loop.hpp"
#include "regpair/rational.hpp"

namespace regpair {

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' integer)?
///   base   := 'z' | complex-literal | '(' expr ')'
/// into a reduced RationalFunction.  Throws ParseError with a byte offset
/// and the expected-token set.
RationalFunction parse_rational(std::string_view text);

/// Loop literal: `circle(re,im,r)` or `fourier(k1:re,im; k2:re,im; ...)`.
Loop parse_loop(std::string_view text);

/// Fourier literal `fourier(k:re,im; ...)` read as the circle function
/// sum c_k e^{ik theta} on the given grid.
CircleFunction parse_fourier_function(std::string_view text, std::size_t grid);

/// `inf`, a single real, or `re,im`.
Point parse_point(std::string_view text);

}  // namespace regpair
