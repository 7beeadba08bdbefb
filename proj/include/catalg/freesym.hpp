#pragma once

// The free symmetric monoidal category on a finite category: objects are
// tuples, morphisms are pairs (sigma, f) of a permutation and componentwise
// morphisms; plus the permutation groupoid and the extension of functors
// into the matrix model.

#include <catalg/matrix.hpp>

namespace catalg {

// A finite category: objects 0..nobjects-1, morphisms listed with source,
// target, identities, and a composition table (-1 = not composable).
struct FinCat {
    int nobjects = 0;
    std::vector<std::pair<int, int>> mor;  // (src, dst) per morphism
    std::vector<int> identity;             // identity morphism per object
    std::vector<std::vector<int>> comp;    // comp[g][f] = g o f

    bool validate() const;

    static FinCat one_object();            // terminal category
    static FinCat two_objects_one_arrow(); // 0 -> 1 plus identities
};

struct SmcMorphism {
    std::vector<int> src, dst;   // object tuples of equal length
    std::vector<int> perm;       // one-line: slot i goes to slot perm[i]
    std::vector<int> comps;      // comps[i] : src[i] -> dst[perm[i]]
};

bool smc_valid(const FinCat& c, const SmcMorphism& f);
SmcMorphism smc_identity(const FinCat& c, const std::vector<int>& objects);
SmcMorphism smc_compose(const FinCat& c, const SmcMorphism& g, const SmcMorphism& f);
SmcMorphism smc_tensor(const FinCat& c, const SmcMorphism& f, const SmcMorphism& g);
bool smc_equal(const SmcMorphism& a, const SmcMorphism& b);

// Hom sets of the permutation groupoid: all of Sigma_n when n = m, empty
// otherwise.
std::vector<std::vector<int>> perm_groupoid_hom(int n, int m);
std::vector<int> perm_compose(const std::vector<int>& tau, const std::vector<int>& sigma);

// A functor into QQ-matrices: a dimension per object and a matrix per
// morphism.
struct MatrixFunctor {
    std::vector<int> dims;
    std::vector<MatC> images;
};

bool functor_valid(const FinCat& c, const MatrixFunctor& f);

// Strong symmetric monoidal extension on a morphism of the free symmetric
// monoidal category: permutation-of-factors matrix composed with the
// Kronecker product of the component images.
MatC extend_functor(const FinCat& c, const MatrixFunctor& f, const SmcMorphism& m);

// Mixed-dimension permutation matrix: source factors have dims[i] and the
// factor in slot i moves to slot perm[i].
MatC factor_permutation_matrix(const std::vector<int>& perm, const std::vector<int>& dims);

}  // namespace catalg
