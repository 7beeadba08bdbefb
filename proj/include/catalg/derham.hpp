#pragma once

// Derivations, the module of differentials via two independent
// presentations, the algebraic de Rham complex of a finite-dimensional
// algebra, and the single-chart Euler contraction.
//
// Differentials are stored as base-field-linear matrices on chosen monomial
// bases (d is only linear over the base, not over B).

#include <catalg/fpmod.hpp>

namespace catalg {

// B = k[x1..xn]/I with char(k) != 2.
struct FpAlgebra {
    Ring ring;
    bool finite_dimensional;

    static FpAlgebra from_ring(const Ring& r) {
        if (r->kind() != RingKind::PolyQuotient)
            throw std::domain_error("FpAlgebra requires a polynomial quotient ring");
        if (r->char_p() == 2)
            throw std::domain_error("characteristic-2 base rejected (exterior powers need 2 invertible)");
        return FpAlgebra{r, r->finite_dimensional()};
    }
};

struct Omega1 {
    ModulePresentation module;  // over B: generators dx_1..dx_n, Jacobian rows
    MatC d0;                    // universal differential B -> Omega^1 on k-bases
    QuotientBasis omega_basis;  // k-basis bookkeeping of Omega^1
    size_t dim = 0;             // dim_k Omega^1 (finite-dimensional B only)

    // cross-check against the Prop-4.5.3 cokernel construction
    bool cokernel_dim_matches = false;
    bool cokernel_iso_certified = false;   // iso commuting with d
};

// Jacobian/conormal presentation of Omega^1_{B/k}; for finite-dimensional B
// the independent cokernel construction is computed and compared.
Omega1 omega1(const FpAlgebra& b);

// Is the Leibniz extension of x_i |-> images[i] a well-defined derivation
// B -> M?  Exhaustive over products of basis monomials.
bool universal_derivation_check(const FpAlgebra& b, const ModulePresentation& m,
                                const std::vector<std::vector<RElem>>& images);

struct DeRhamComplex {
    Ring algebra;
    std::vector<size_t> dims;  // dim_k Omega^0 .. Omega^pmax
    std::vector<MatC> diff;    // d^p on the chosen k-bases
    bool d_squared_zero = false;
    bool graded_leibniz = false;

    std::vector<size_t> cohomology() const;
};

DeRhamComplex derham_complex(const FpAlgebra& b, int pmax);

std::vector<size_t> derham_cohomology(const FpAlgebra& b);

struct FunctorialityReport {
    bool sum_rule_holds = false;      // Omega^1_{B1 (x) B2} = sum of the pieces
    bool base_change_holds = false;   // Omega^1_B (x) C = Omega^1_{B (x) C}
    size_t lhs_dim = 0, rhs_dim = 0;  // of the sum rule comparison
};

FunctorialityReport omega1_functoriality_checks(const FpAlgebra& b1, const FpAlgebra& b2,
                                                const FpAlgebra& c);

struct EulerContractionReport {
    bool s_iota_id = false;      // s o iota = id
    bool p_t_id = false;         // p o t = id
    bool tp_plus_iotas_id = false;  // t o p + iota o s = id
    bool all() const { return s_iota_id && p_t_id && tp_plus_iotas_id; }
};

// Euler-chart contraction for E = QQ^{n+1} with chart the first coordinate,
// verified as polynomial matrix identities over QQ[x_1..x_n].
EulerContractionReport euler_contraction_check(int n);

}  // namespace catalg
