#pragma once

// Spec-level operations of the exact-ring layer that are not already part
// of the polynomial/Groebner machinery.

#include <catalg/matrix.hpp>
#include <catalg/ring.hpp>

namespace catalg {

// Formal Jacobian: entry (i,j) = d gens[i] / d x_j.
inline Mat<Polynomial> jacobian(const std::vector<Polynomial>& gens, size_t nvars,
                                unsigned long p) {
    Mat<Polynomial> m(gens.size(), nvars, Polynomial(nvars, p));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < nvars; ++j) m(i, j) = gens[i].derivative(j);
    return m;
}

// Canonical representative in a quotient ring (identity on other kinds).
inline RElem canonical(const Ring& r, const Polynomial& p) { return RElem::from_poly(r, p); }

}  // namespace catalg
