#pragma once

// Symmetric-group actions on tensor powers, symmetric/antisymmetric/exterior
// powers, the exterior-algebra Hopf maps, locally-free-rank-d classification
// and Cramer inversion.  Free modules get combinatorial bases (weakly or
// strictly increasing index tuples); presented modules go through the
// coequalizer presentations.

#include <catalg/fpmod.hpp>

namespace catalg {

// ---------------------------------------------------------------------------
// Index tuples over {0..m-1}.

std::vector<std::vector<int>> all_tuples(int m, int n);
std::vector<std::vector<int>> weakly_increasing_tuples(int m, int n);
std::vector<std::vector<int>> strictly_increasing_tuples(int m, int n);

size_t tuple_rank(const std::vector<int>& t, int m);  // lexicographic in m^n

// Sign of the permutation sorting t; 0 if t has a repeated entry.
int sort_sign(std::vector<int> t);

long long binomial(int n, int k);

// ---------------------------------------------------------------------------
// Permutations in one-line notation: sigma[i] = image of slot i.

std::vector<std::vector<int>> adjacent_transposition_decomposition(std::vector<int> sigma);
int permutation_sign(const std::vector<int>& sigma);

// Action of sigma on the tuple basis of (k^m)^{(x) n}: the slot-i factor
// moves to slot sigma(i).  Built as a product of adjacent transpositions.
MatC perm_action(const std::vector<int>& sigma, int m, unsigned long p = 0);

// Single adjacent transposition (i, i+1) on the tuple basis.
MatC adjacent_swap_matrix(int i, int m, int n, unsigned long p = 0);

// ---------------------------------------------------------------------------
// Free-module fast path (field coefficients with characteristic p).

// Quotient map (k^m)^{(x) n} -> Sym^n, basis = weakly increasing tuples.
MatC sym_projection(int m, int n, unsigned long p = 0);
// Quotient map (k^m)^{(x) n} -> Lambda^n, basis = strictly increasing tuples.
MatC wedge_projection(int m, int n, unsigned long p = 0);

// Sym^a (x) Sym^b -> Sym^{a+b} on the multiset bases.
MatC sym_multiply(int m, int a, int b, unsigned long p = 0);
// Lambda^a (x) Lambda^b -> Lambda^{a+b} on the subset bases.
MatC wedge_multiply(int m, int a, int b, unsigned long p = 0);
// Lambda^{a+b} -> Lambda^a (x) Lambda^b, shuffle comultiplication.
MatC shuffle_comultiply(int m, int a, int b, unsigned long p = 0);
// omega : Lambda^{d+1} -> V (x) Lambda^d, alternating sum.
MatC omega_map(int m, int d, unsigned long p = 0);

// Induced map Lambda^p(f) on the subset bases (entries are p x p minors).
MatC lambda_power_matrix(const MatC& f, int p);
// Induced map Sym^p(f) on multiset bases.
MatC sym_power_matrix(const MatC& f, int p);

// ---------------------------------------------------------------------------
// Coequalizer presentations (any supported ring).

struct PowerPresentation {
    ModulePresentation power;   // Sym^n or ASym^n (or Lambda via Prop 4.4.9)
    ModMorphism quotient_map;   // from M^{(x) n}
};

PowerPresentation sym_power(const ModulePresentation& m, size_t n);
PowerPresentation asym_power(const ModulePresentation& m, size_t n);

enum class ExtMode { Asym, Alternating };

// Asym mode requires 2 to be a unit; Alternating mode (the extra-structure
// route) requires the ring to be ZZ or GF(2).
PowerPresentation ext_power(const ModulePresentation& m, size_t n, ExtMode mode);

// Multiplication Sym^a (x) Sym^b -> Sym^{a+b} on presentations.
ModMorphism sym_multiplication(const ModulePresentation& m, size_t a, size_t b);

// Exterior power on the strictly-increasing-tuple generators (2 must be a
// unit): Lambda^p(coker U) = Lambda^p(free) / (U ^ Lambda^{p-1}(free)).
// Much smaller than the coequalizer presentation; generator I is the wedge
// of the module generators indexed by I.
struct ReducedExtPower {
    std::vector<std::vector<int>> basis_tuples;
    ModulePresentation power;
};

ReducedExtPower ext_power_reduced(const ModulePresentation& m, size_t p);

// ---------------------------------------------------------------------------
// Binomial/Vandermonde decompositions on free modules over a field.

enum class BinomialFlavor { Tensor, Sym, Ext };

struct BinomialReport {
    bool composites_identity = false;
    size_t lhs_dim = 0, rhs_dim = 0;
    std::vector<size_t> summand_dims;  // per p = 0..n
};

BinomialReport binomial_decompose(int dim_a, int dim_b, int n, BinomialFlavor flavor,
                                  unsigned long p = 0);

// ---------------------------------------------------------------------------
// Locally free objects and Cramer.

struct LocallyFreeReport {
    bool det_invertible = false;
    bool det_is_line = false;
    bool omega_zero = false;
    bool is_locally_free_rank_d = false;
    bool duality_holds = false;  // triangle diagrams for every 1 <= p <= d
};

// Free path: V = k^m tested at rank d (characteristic 0 or > d).
LocallyFreeReport locally_free_check_free(int m, int d, unsigned long p = 0);
// Presented path over a field ring.
LocallyFreeReport locally_free_check(const ModulePresentation& v, int d);

struct CramerResult {
    bool invertible = false;
    MatC inverse;        // valid when invertible
    Coef determinant;    // Lambda^d f
};

// f: d x d matrix over a field, viewed as a morphism of free rank-d modules.
CramerResult cramer_inverse(const MatC& f);

// Determinant by exact fraction-free elimination (test oracle).
Coef det_oracle(MatC a);

}  // namespace catalg
