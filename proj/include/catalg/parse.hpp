#pragma once

// Text grammar for ring and polynomial literals, e.g.
//   QQ, ZZ, ZZ/6, QQ[x,y]/(x^2-1, x*y), ZZ/5[t]/(t^3+t+1)
// Polynomials use infix notation with ^ for powers; * may be omitted
// between a coefficient and a variable.

#include <catalg/ring.hpp>

namespace catalg {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Parse a polynomial in the given variables (characteristic p, 0 for QQ).
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            unsigned long p);

Ring parse_ring(const std::string& text);

}  // namespace catalg
