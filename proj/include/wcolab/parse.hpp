#pragma once

#include <string_view>

#include "wcolab/analytic.hpp"

namespace wcolab {

/// Parses the expression mini-language:
///
///   const(re,im)  poly(c0,c1,...)  mobius(a_re,a_im,theta)
///   add(e,e)  mul(e,e)  compose(outer,inner)  recip(e)  pow(e,alpha)
///
/// Polynomial coefficients are complex literals such as 2, -1.5i, 0.5+2i.
/// mobius(...) denotes e^{i theta} (a - z) / (1 - conj(a) z). Whitespace is
/// ignored between tokens. Throws ParseError.
Expr parse_expression(std::string_view text);

}  // namespace wcolab
