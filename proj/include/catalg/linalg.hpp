#pragma once

// Linear algebra over a RingDescriptor.  Field rings go through Gaussian
// elimination, ZZ and ZZ/n through Smith normal form, finite-dimensional
// quotient rings through scalar extension to the base field (each unknown
// becomes dim-many base-field unknowns via the regular representation).

#include <catalg/matrix.hpp>
#include <catalg/ring.hpp>

namespace catalg {

using MatR = Mat<RElem>;

inline MatR rmat(const Ring& r, size_t rows, size_t cols) {
    return MatR(rows, cols, RElem::zero(r));
}

inline MatR rmat_identity(const Ring& r, size_t n) {
    return mat_identity<RElem>(n, RElem::zero(r), RElem::one(r));
}

inline MatR rmat_mul(const Ring& r, const MatR& a, const MatR& b) {
    return mat_mul<RElem>(a, b, RElem::zero(r));
}

// Solve A x = b over the ring; nullopt if no solution exists.
std::optional<std::vector<RElem>> ring_solve(const Ring& r, const MatR& a,
                                             const std::vector<RElem>& b);

// Generating set (over the ring) of { x : A x = 0 }.
std::vector<std::vector<RElem>> ring_kernel_gens(const Ring& r, const MatR& a);

inline bool ring_in_colspan(const Ring& r, const MatR& a, const std::vector<RElem>& v) {
    return ring_solve(r, a, v).has_value();
}

// Base-field dimension of R^gens / colspan(rel columns) for finite cases:
// fields, ZZ/n (counts elements via invariant factors is separate), and
// finite-dimensional quotient rings.  Defined for field-like expansions.
size_t quotient_dim_over_base(const Ring& r, size_t gens, const MatR& rel_cols);

// Expand a matrix over a finite-dimensional quotient ring (or field) to a
// base-field matrix; fields expand with block size 1.
MatC expand_to_base(const Ring& r, const MatR& a);

// Number of base-field coordinates per ring element (1 for fields).
size_t base_block_size(const Ring& r);

// Coordinates of an element in the base-field expansion.
std::vector<Coef> elem_coords(const Ring& r, const RElem& e);
RElem elem_from_coords(const Ring& r, const std::vector<Coef>& c);

}  // namespace catalg
