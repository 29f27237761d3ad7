#pragma once

#include "painleve/errors.hpp"
#include "painleve/ode.hpp"

#include <string>
#include <string_view>

namespace painleve {

/// Parses "lhs = rhs" into w^(n) = sum a_chi(z) prod (w^(j))^chi_j.
///
/// Grammar: rationals, `i`, `z`, `w`, `w'`..`w'''`, `w[k]`, `+ - * ^ ( )`.
/// Multiplication is explicit; `^` takes a natural exponent; `/` is allowed
/// only by a nonzero constant.
///
/// Throws SyntaxError, NonPolynomial, NonMonicLeading or MissingDerivative.
PolynomialODE parse_equation(std::string_view text);

/// Deterministic text with terms in graded order; parse_equation inverts it.
std::string render_canonical(const PolynomialODE& ode);

/// A constant expression such as "1/2", "-3", "1+2*i".
GaussRational parse_constant(std::string_view text);

}  // namespace painleve
