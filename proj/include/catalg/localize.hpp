#pragma once

// The omega-iterated reflector framework with its concrete instances:
// torsion reflection on finitely generated abelian groups, the torsion-free
// tensor, and homogeneous section localization of graded QQ[t]-modules.

#include <catalg/matrix.hpp>

#include <functional>

namespace catalg {

// Canonical form: invariant factors d1 | d2 | ... with 0 for free summands
// and entries equal to 1 dropped.
struct FgAbGroup {
    std::vector<Int> invariants;

    bool operator==(const FgAbGroup& o) const { return invariants == o.invariants; }
    size_t free_rank() const {
        size_t r = 0;
        for (auto& d : invariants)
            if (d == 0) ++r;
        return r;
    }
    bool is_finite() const { return free_rank() == 0; }
    Int order() const {  // finite groups only
        Int n = 1;
        for (auto& d : invariants) n *= d;
        return n;
    }
    std::string str() const;
};

// Canonicalize an arbitrary cyclic-factor list via Smith form.
FgAbGroup fg_group(const std::vector<Int>& factors);

struct Endoreflector {
    std::function<FgAbGroup(const FgAbGroup&)> step;       // R_1
    std::function<bool(const FgAbGroup&)> fixed;           // eta iso?
};

struct IterationResult {
    FgAbGroup result;
    int steps = 0;
    bool reached_fixed_point = false;  // false = not fixed within max_steps
};

IterationResult iterate_reflector(const Endoreflector& r, const FgAbGroup& m, int max_steps);

// One torsion step M / ker(a : M -> M) and the omega-limit (strip the
// a-primary part); multiplication by a is injective on the result.
FgAbGroup torsion_reflect_once(const FgAbGroup& m, const Int& a);
FgAbGroup torsion_reflect(const FgAbGroup& m, const Int& a);
bool multiplication_injective(const FgAbGroup& m, const Int& a);
Endoreflector torsion_reflector(const Int& a);

struct ReflectionUniversalReport {
    size_t hom_from_reflection = 0;  // |Hom(R_omega M, N)|
    size_t hom_from_original = 0;    // |Hom(M, N)|
    bool bijection = false;
};

// Precomposition Hom(R_omega M, N) -> Hom(M, N) is a bijection for every
// target with a injective; exhaustive for finite N, rank count for free N.
ReflectionUniversalReport reflection_universal_check(const FgAbGroup& m, const Int& a,
                                                     const FgAbGroup& n);

// Classical tensor product via the invariant-factor rules.
FgAbGroup classical_tensor(const FgAbGroup& m, const FgAbGroup& n);
// Torsion-free tensor (M (x) N) / Tor.
FgAbGroup tf_tensor(const FgAbGroup& m, const FgAbGroup& n);
// The torsion-free part M / Tor(M).
FgAbGroup torsion_free_part(const FgAbGroup& m);

// ---------------------------------------------------------------------------
// Homogeneous section localization for graded QQ[t]-modules, deg t = 1.

struct GradedQtModule {
    std::vector<size_t> dims;  // dims of M_0 .. M_k
    std::vector<MatC> tmul;    // tmul[i] : M_i -> M_{i+1}
};

struct SectionLocalization {
    bool stabilized = false;
    int stable_degree = -1;   // all maps from here on are isomorphisms
    size_t colimit_dim = 0;
};

SectionLocalization section_localize(const GradedQtModule& m);

}  // namespace catalg
