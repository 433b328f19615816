#ifndef SUBFIELD_POLY_HPP
#define SUBFIELD_POLY_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subfield/gf.hpp"

namespace subfield {

/// Polynomials over F_{q^m} as coefficient vectors, low degree first,
/// trailing zeros trimmed. The zero polynomial is the empty vector.
using FieldPoly = std::vector<FieldElement>;

void poly_trim(FieldPoly& a);
int poly_degree(const FieldPoly& a);  // -1 for the zero polynomial

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b, const FieldSpec& spec);

/// Division with remainder; divisor must be nonzero.
std::pair<FieldPoly, FieldPoly> poly_divmod(const FieldPoly& num, const FieldPoly& den,
                                            const FieldSpec& spec);

bool poly_divides(const FieldPoly& den, const FieldPoly& num, const FieldSpec& spec);

/// x^n - 1 over the given field.
FieldPoly poly_xn_minus_one(const FieldSpec& spec, int n);

/// Parses e.g. "x^4+a^12*x^3+a^2*x^2+a^12*x+1". Terms are separated by '+'
/// or '-'; each term is [coef]['*']["x"["^"k]] with coef an element token.
FieldPoly parse_polynomial(const FieldSpec& spec, const std::string& text);
std::string format_polynomial(const FieldPoly& a);

}  // namespace subfield

#endif
