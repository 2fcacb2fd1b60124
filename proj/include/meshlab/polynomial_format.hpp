#pragma once

#include <string>
#include <string_view>

#include "meshlab/polynomial.hpp"

namespace meshlab {

enum class PolynomialStyle {
  Factored,  // "8x^2(1+x)": integer content and lowest power pulled out, as in the tables
  Expanded,  // "8x^2+8x^3"
};

/// Renders a polynomial as ASCII text. The variable name defaults to x.
std::string format_polynomial(const XPolynomial& p, PolynomialStyle style = PolynomialStyle::Factored,
                              char variable = 'x');
std::string format_polynomial(const NPolynomial& p, PolynomialStyle style = PolynomialStyle::Expanded,
                              char variable = 'n');

/// LaTeX rendering with the same factoring: "x^{2} \left(3+2 x\right)".
std::string format_polynomial_latex(const XPolynomial& p);

/// Parses sums and products of rational numbers, the variable with an optional
/// "^k" exponent, and parenthesized subexpressions. Accepts every string the
/// formatters above produce (including LaTeX's braces and \left/\right).
XPolynomial parse_polynomial(std::string_view text, char variable = 'x');

}  // namespace meshlab
