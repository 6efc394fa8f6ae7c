#ifndef QAP_POLY_TEXT_HPP
#define QAP_POLY_TEXT_HPP

#include <string>

#include "qap/int_poly.hpp"

namespace qap {

// Shared polynomial text format: ascending coefficient list "[c0,c1,...,cd]"
// or human-readable "X^4 - X - 1" ('*' optional, implicit coefficient 1,
// lowercase x accepted, U+2212 minus accepted).  Throws domain_error on
// malformed input.
IntPoly parse_poly(const std::string& text);

// "<poly>@<k>" -> (poly, k); k is the 0-based root index in (Re, Im)-lex order.
std::pair<IntPoly, int> parse_poly_at(const std::string& text);

std::string coeff_list_str(const IntPoly& p);  // "[c0,c1,...,cd]"

}  // namespace qap

#endif
