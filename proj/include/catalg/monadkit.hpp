#pragma once

// Locally finite algebraic theories on finite sets, their derived strengths
// and monoidal structure, bihomomorphisms, and monadic tensor products of
// finite algebras via congruence closure.
//
// A theory is supplied through its free-algebra oracle: the carrier of
// free(S) for a finite set S, the unit, functorial relabeling, and a
// flattening.  Finite sets are {0..n-1}; elements of free(S) use a small
// per-theory encoding (TE).

#include <catalg/numeric.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catalg {

using TE = std::vector<long long>;

class Theory {
  public:
    virtual ~Theory() = default;
    virtual std::string name() const = 0;

    // |free([n])|, or -1 when not enumerable at this size.
    virtual long long free_count(int n) const = 0;
    virtual TE eta(int n, int x) const = 0;
    // free(f) for f : [n] -> [m] given by a table.
    virtual TE tmap(int n, int m, const std::vector<int>& f, const TE& u) const = 0;
    virtual long long index_of(int n, const TE& u) const = 0;
    virtual TE elem_at(int n, long long idx) const = 0;
    // mu : free(free([n])) -> free([n]); the outer element is encoded over
    // the enumeration of free([n]).
    virtual TE mu(int n, const TE& outer) const = 0;
    // The lax monoidal structure d : T(A) x T(B) -> T(A x B) with the pair
    // (a, b) encoded as a * nB + b.
    virtual TE d(int na, int nb, const TE& u, const TE& v) const = 0;

    struct Op {
        std::string name;
        int arity;
        TE term;  // element of free([arity])
    };
    virtual std::vector<Op> ops() const = 0;
};

using TheoryPtr = std::shared_ptr<const Theory>;

TheoryPtr pointed_theory();
TheoryPtr suplattice_theory();
TheoryPtr semilattice_theory();
TheoryPtr modn_theory(int n);
// Finite monoid given by its multiplication table (unit = index 0).
TheoryPtr mset_theory(std::vector<std::vector<int>> mul, std::string monoid_name);

// Strength, costrength, and the two Remark-6.3.2 composites for d (the
// second must agree for commutative theories).
TE strength(const Theory& th, int na, int nb, int a, const TE& v);
TE costrength(const Theory& th, int na, int nb, const TE& u, int b);
TE d_composite_costrength_first(const Theory& th, int na, int nb, const TE& u, const TE& v);
TE d_composite_strength_first(const Theory& th, int na, int nb, const TE& u, const TE& v);

// ---------------------------------------------------------------------------

struct FiniteAlgebra {
    TheoryPtr th;
    int size = 0;
    std::function<int(const TE&)> act;  // free(carrier) -> carrier
    std::string desc;

    int op(const Theory::Op& o, const std::vector<int>& args) const;
};

FiniteAlgebra free_algebra(const TheoryPtr& th, int n);
// a o eta = id and a o mu = a o T(a); the second is exhaustive only when
// free(free(carrier)) is enumerable within the cap.
bool algebra_valid(const FiniteAlgebra& a, long long cap = 1 << 16);

// Built-in algebra families (used by the law suites).
FiniteAlgebra pointed_algebra(int size);                   // basepoint 0
FiniteAlgebra chain_lattice(const TheoryPtr& supl, int size);
FiniteAlgebra chain_semilattice(const TheoryPtr& semil, int size);
FiniteAlgebra vee_semilattice(const TheoryPtr& semil);     // a, b < c
FiniteAlgebra modn_cyclic(const TheoryPtr& modn, int d);   // Z/d, d | n
FiniteAlgebra mset_algebra(const TheoryPtr& mset, int size, std::vector<std::vector<int>> table);

// All algebras of the theory with carrier size <= max_size (up to the
// constructions enumerable at desk scale).
std::vector<FiniteAlgebra> enumerate_algebras(const TheoryPtr& th, int max_size);

// ---------------------------------------------------------------------------

struct LawReport {
    bool unit_laws = true;
    bool associativity = true;
    bool eta_monoidal = true;     // d(eta a, eta b) = eta(a, b)
    bool mu_monoidal = true;      // d o (mu x mu) = mu o T(d) o d
    bool d_symmetric = true;      // d o swap = T(swap) o d
    bool d_composites_agree = true;
    bool exhaustive = true;       // false when a generator-based regime ran
    std::string witness;

    bool all() const {
        return unit_laws && associativity && eta_monoidal && mu_monoidal && d_symmetric &&
               d_composites_agree;
    }
};

LawReport check_monad_laws(const TheoryPtr& th, int max_size);

// ---------------------------------------------------------------------------

struct BihomReport {
    bool single_square = false;   // Prop-6.4.3 criterion
    bool per_variable = false;    // homomorphism in each variable
    bool criteria_agree = false;
};

// f : A x B -> C as a table f[a * |B| + b].
BihomReport is_bihom(const std::vector<int>& f, const FiniteAlgebra& a,
                     const FiniteAlgebra& b, const FiniteAlgebra& c);

// Preservation of the theory's basic operations (which generate all derived
// operations, so this is the homomorphism condition).
bool is_hom(const std::vector<int>& f, const FiniteAlgebra& a, const FiniteAlgebra& b);
// Direct check against the full free algebra; agrees with is_hom.
bool is_hom_exhaustive(const std::vector<int>& f, const FiniteAlgebra& a,
                       const FiniteAlgebra& b);

// Carrier bijection respecting the operations.
bool algebras_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);
// One representative per isomorphism class.
std::vector<FiniteAlgebra> enumerate_algebras_distinct(const TheoryPtr& th, int max_size);

// ---------------------------------------------------------------------------

struct TensorResult {
    FiniteAlgebra algebra;
    std::vector<std::vector<int>> pair_map;   // universal bihom on carriers
    std::function<int(const TE&)> project;    // free(A x B) -> quotient
    std::function<TE(int)> lift;              // section
    bool well_defined = false;                // re-verified, not assumed
    std::string engine;                       // generic | lattice | linear
};

TensorResult tensor_algebras(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ---------------------------------------------------------------------------

struct UniversalReport {
    size_t bihom_count = 0;
    size_t hom_count = 0;
    bool bijection = false;  // h |-> h o (x) is a bijection onto the bihoms
};

UniversalReport verify_universal(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                 const FiniteAlgebra& c);

struct StructureReport {
    bool free_tensor = false;     // F(X) (x) F(Y) = F(X x Y)
    bool symmetry = false;        // A (x) B = B (x) A
    bool associativity = false;   // (A (x) B) (x) C = A (x) (B (x) C)
    size_t free_lhs = 0, free_rhs = 0;
};

StructureReport verify_structure_isos(const TheoryPtr& th, int nx, int ny,
                                      const FiniteAlgebra& a, const FiniteAlgebra& b,
                                      const FiniteAlgebra& c);

// F(X) (x) F(Y) = F(X x Y) alone (usable at larger sizes).
bool verify_free_tensor(const TheoryPtr& th, int nx, int ny, size_t* lhs = nullptr,
                        size_t* rhs = nullptr);

}  // namespace catalg
