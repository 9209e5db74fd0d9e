#ifndef CARLITZ_PARSE_HPP
#define CARLITZ_PARSE_HPP

/// Parsers for the textual grammars used by the CLI and the JSON reports.
///
/// Field elements:  0 | 1 | 2 | w | w+1 | 2*w+2 | w^2+w | ...
///   Sums of terms c, c*w^k, w^k; "*" is optional; integer coefficients must
///   lie in [0, p).  Powers w^k with k >= s are reduced into the field.
///
/// Polynomials over F_q[T]:  T^3+2*T | (w+1)*T^2+w | 1 | 0 | ...
///   Sums of terms [coeff *] T[^k]; coefficients follow the field element
///   grammar, parenthesized when they are themselves sums.  Whitespace is
///   ignored everywhere.  The parser accepts terms in any order and
///   accumulates duplicates; the canonical printers in ffield/poly emit
///   decreasing degree.
///
/// Malformed input throws ParseError.

#include <string_view>

#include "carlitz/poly.hpp"

namespace carlitz {

FieldElement parse_field_element(std::string_view text, const FieldSpecPtr& spec);

Poly parse_poly(std::string_view text, const FieldSpecPtr& spec);

} // namespace carlitz

#endif
