#pragma once

// Finitely presented modules over a RingDescriptor and morphisms between
// them.  Morphism equality is always "difference lies in the relation
// span", decided by exact linear algebra (fields, finite-dimensional
// quotient rings) or Smith form (ZZ, ZZ/n).

#include <catalg/linalg.hpp>

#include <map>

namespace catalg {

class ModulePresentation {
  public:
    ModulePresentation() : gens_(0) {}
    ModulePresentation(Ring ring, size_t gens, std::vector<std::vector<RElem>> rels = {})
        : ring_(std::move(ring)), gens_(gens), rels_(std::move(rels)) {
        for (auto& r : rels_)
            if (r.size() != gens_) throw std::invalid_argument("relation arity mismatch");
    }

    static ModulePresentation free_module(const Ring& r, size_t n) {
        return ModulePresentation(r, n);
    }
    static ModulePresentation zero_module(const Ring& r) { return ModulePresentation(r, 0); }

    const Ring& ring() const { return ring_; }
    size_t gens() const { return gens_; }
    const std::vector<std::vector<RElem>>& rels() const { return rels_; }
    bool is_free_presentation() const { return rels_.empty(); }

    void add_relation(std::vector<RElem> row) {
        if (row.size() != gens_) throw std::invalid_argument("relation arity mismatch");
        rels_.push_back(std::move(row));
    }

    // gens x #rels matrix whose columns span the relation submodule.
    MatR rel_cols() const {
        MatR m = rmat(ring_, gens_, rels_.size());
        for (size_t k = 0; k < rels_.size(); ++k)
            for (size_t i = 0; i < gens_; ++i) m(i, k) = rels_[k][i];
        return m;
    }

    // Is the given column (length gens) contained in the relation span?
    bool element_is_zero(const std::vector<RElem>& v) const {
        return ring_in_colspan(ring_, rel_cols(), v);
    }

  private:
    Ring ring_;
    size_t gens_;
    std::vector<std::vector<RElem>> rels_;
};

// A morphism is a matrix on generators together with the (re-checkable)
// certificate that it maps source relations into target relations.
class ModMorphism {
  public:
    ModMorphism() = default;
    ModMorphism(ModulePresentation src, ModulePresentation dst, MatR mat)
        : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
        if (mat_.rows() != dst_.gens() || mat_.cols() != src_.gens())
            throw std::invalid_argument("morphism matrix shape mismatch");
    }

    const ModulePresentation& src() const { return src_; }
    const ModulePresentation& dst() const { return dst_; }
    const MatR& mat() const { return mat_; }

    bool well_defined() const {
        for (const auto& rel : src_.rels()) {
            std::vector<RElem> col(dst_.gens(), RElem::zero(src_.ring()));
            for (size_t i = 0; i < dst_.gens(); ++i)
                for (size_t j = 0; j < src_.gens(); ++j) col[i] = col[i] + mat_(i, j) * rel[j];
            if (!dst_.element_is_zero(col)) return false;
        }
        return true;
    }

    bool is_zero() const {
        for (size_t j = 0; j < src_.gens(); ++j)
            if (!dst_.element_is_zero(mat_.col(j))) return false;
        return true;
    }

  private:
    ModulePresentation src_, dst_;
    MatR mat_;
};

ModMorphism mod_identity(const ModulePresentation& m);
ModMorphism mod_compose(const ModMorphism& g, const ModMorphism& f);  // g after f
bool morphisms_equal(const ModMorphism& f, const ModMorphism& g);

// ---------------------------------------------------------------------------
// Tensor products.  Generator (i,j) of M (x) N has index i * N.gens() + j.

inline size_t tensor_index(size_t ngens_n, size_t i, size_t j) { return i * ngens_n + j; }

ModulePresentation tensor_modules(const ModulePresentation& m, const ModulePresentation& n);
ModMorphism tensor_symmetry(const ModulePresentation& m, const ModulePresentation& n);
ModMorphism tensor_of_morphisms(const ModMorphism& f, const ModMorphism& g);

ModulePresentation direct_sum(const ModulePresentation& m, const ModulePresentation& n);

// n-fold tensor power; generators are index tuples in lexicographic order.
ModulePresentation tensor_power(const ModulePresentation& m, size_t n);

// ---------------------------------------------------------------------------
// Hom.

struct HomModule {
    ModulePresentation presentation;  // of Hom(M, N) as a module
    std::vector<MatR> generators;     // morphism matrices dst.gens x src.gens
};

HomModule hom_module(const ModulePresentation& m, const ModulePresentation& n);

// ---------------------------------------------------------------------------

bool is_symtrivial(const ModulePresentation& m);

struct LineReport {
    bool dualizable = false;
    bool invertible = false;
    bool has_signature = false;
    RElem signature;
    bool is_line = false;
    bool is_antiline = false;
    ModulePresentation dual;
    std::vector<MatR> dual_generators;
};

LineReport line_classify(const ModulePresentation& m);

// ---------------------------------------------------------------------------
// Graded modules (plain or twisted symmetry).

struct GradedModule {
    Ring ring;
    bool twisted = false;
    std::map<int, ModulePresentation> comps;  // only nonzero components stored

    const ModulePresentation component(int d) const {
        auto it = comps.find(d);
        if (it != comps.end()) return it->second;
        return ModulePresentation::zero_module(ring);
    }
};

GradedModule graded_tensor(const GradedModule& a, const GradedModule& b);
GradedModule graded_shift(const GradedModule& m, int d);  // M[d]_n = M_{n+d}

// Sign of the symmetry on the (p,q) block: -1 iff twisted and p*q odd.
inline int graded_symmetry_sign(bool twisted, int p, int q) {
    return (twisted && (p % 2 != 0) && (q % 2 != 0)) ? -1 : 1;
}

struct GradedLineReport {
    bool invertible = false;
    bool has_signature = false;
    Rat signature;  // components restricted to QQ-vector spaces
    bool is_line = false;
    bool is_antiline = false;
};

// Restricted to graded modules whose components are free modules over a
// field ring; enough for the twisted-degree examples.
GradedLineReport graded_line_classify(const GradedModule& m);

// ---------------------------------------------------------------------------
// Orthogonal idempotent decompositions of ZZ/n.

struct Oid {
    std::vector<Int> idempotents;  // pairwise orthogonal, summing to 1
};

struct OidReport {
    Int n;
    std::vector<Int> idempotents;       // all idempotent residues
    std::vector<Oid> decompositions;    // all o.i.d. (nonzero parts)
    std::vector<std::vector<Int>> summand_orders;  // |im(e_i)| per decomposition
};

OidReport oid_decompose(const Int& n);

// ---------------------------------------------------------------------------
// Chain complexes of finite-dimensional vector spaces over a field.

struct ChainComplex {
    unsigned long characteristic = 0;
    std::vector<size_t> dims;   // dims[i] = dim C^i
    std::vector<MatC> diff;     // diff[i] : C^i -> C^{i+1}

    bool d_squared_zero() const;
    // dim H^i = dim ker(diff[i]) - rank(diff[i-1]).
    std::vector<size_t> cohomology_dims() const;
};

// Amitsur complex 0 -> M -> M (x) A -> M (x) A^2 -> ... (length terms after M),
// for a finite-dimensional algebra A over its base field and M = k^m.
ChainComplex amitsur_complex(const Ring& a, size_t m_dim, int length);

// ---------------------------------------------------------------------------
// Size computations.

// Base-field dimension (fields and finite-dimensional quotient rings).
size_t module_dim(const ModulePresentation& m);

// Invariant factors over ZZ or ZZ/n (d1 | d2 | ..., 0 for free summands).
std::vector<Int> module_invariants(const ModulePresentation& m);

}  // namespace catalg
