#include <catalg/fpmod.hpp>

#include <algorithm>

namespace catalg {

namespace {

void check_same_ring(const ModulePresentation& m, const ModulePresentation& n) {
    if (!m.ring()->same_as(*n.ring())) throw std::invalid_argument("ring mismatch");
}

// Sparse builder for morphism-level linear systems over a ring.
class SysBuilder {
  public:
    explicit SysBuilder(Ring ring) : ring_(std::move(ring)) {}

    size_t add_vars(size_t k) {
        size_t base = nvars_;
        nvars_ += k;
        return base;
    }

    size_t add_row(const RElem& rhs) {
        rows_.emplace_back();
        rhs_.push_back(rhs);
        return rows_.size() - 1;
    }

    void add_entry(size_t row, size_t col, const RElem& v) {
        if (!v.is_zero()) rows_[row].emplace_back(col, v);
    }

    std::optional<std::vector<RElem>> solve() const {
        MatR a = rmat(ring_, rows_.size(), nvars_);
        for (size_t i = 0; i < rows_.size(); ++i)
            for (auto& [j, v] : rows_[i]) a(i, j) = a(i, j) + v;
        return ring_solve(ring_, a, rhs_);
    }

  private:
    Ring ring_;
    size_t nvars_ = 0;
    std::vector<std::vector<std::pair<size_t, RElem>>> rows_;
    std::vector<RElem> rhs_;
};

std::vector<RElem> vectorize(const MatR& m) {
    std::vector<RElem> v;
    v.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

}  // namespace

ModMorphism mod_identity(const ModulePresentation& m) {
    return ModMorphism(m, m, rmat_identity(m.ring(), m.gens()));
}

ModMorphism mod_compose(const ModMorphism& g, const ModMorphism& f) {
    if (g.src().gens() != f.dst().gens())
        throw std::invalid_argument("compose: shape mismatch");
    return ModMorphism(f.src(), g.dst(), rmat_mul(f.src().ring(), g.mat(), f.mat()));
}

bool morphisms_equal(const ModMorphism& f, const ModMorphism& g) {
    ModMorphism diff(f.src(), f.dst(), mat_sub(f.mat(), g.mat()));
    return diff.is_zero();
}

// ---------------------------------------------------------------------------

ModulePresentation tensor_modules(const ModulePresentation& m, const ModulePresentation& n) {
    check_same_ring(m, n);
    const Ring& r = m.ring();
    size_t nm = m.gens(), nn = n.gens();
    ModulePresentation t(r, nm * nn);
    for (const auto& rel : m.rels())
        for (size_t j = 0; j < nn; ++j) {
            std::vector<RElem> row(nm * nn, RElem::zero(r));
            for (size_t i = 0; i < nm; ++i) row[tensor_index(nn, i, j)] = rel[i];
            t.add_relation(std::move(row));
        }
    for (const auto& rel : n.rels())
        for (size_t i = 0; i < nm; ++i) {
            std::vector<RElem> row(nm * nn, RElem::zero(r));
            for (size_t j = 0; j < nn; ++j) row[tensor_index(nn, i, j)] = rel[j];
            t.add_relation(std::move(row));
        }
    return t;
}

ModMorphism tensor_symmetry(const ModulePresentation& m, const ModulePresentation& n) {
    check_same_ring(m, n);
    const Ring& r = m.ring();
    ModulePresentation mn = tensor_modules(m, n);
    ModulePresentation nm = tensor_modules(n, m);
    MatR s = rmat(r, nm.gens(), mn.gens());
    for (size_t i = 0; i < m.gens(); ++i)
        for (size_t j = 0; j < n.gens(); ++j)
            s(tensor_index(m.gens(), j, i), tensor_index(n.gens(), i, j)) = RElem::one(r);
    return ModMorphism(mn, nm, s);
}

ModMorphism tensor_of_morphisms(const ModMorphism& f, const ModMorphism& g) {
    const Ring& r = f.src().ring();
    ModulePresentation src = tensor_modules(f.src(), g.src());
    ModulePresentation dst = tensor_modules(f.dst(), g.dst());
    MatR m = mat_kron(f.mat(), g.mat(), RElem::zero(r));
    return ModMorphism(src, dst, m);
}

ModulePresentation direct_sum(const ModulePresentation& m, const ModulePresentation& n) {
    check_same_ring(m, n);
    const Ring& r = m.ring();
    ModulePresentation s(r, m.gens() + n.gens());
    for (const auto& rel : m.rels()) {
        std::vector<RElem> row(s.gens(), RElem::zero(r));
        for (size_t i = 0; i < m.gens(); ++i) row[i] = rel[i];
        s.add_relation(std::move(row));
    }
    for (const auto& rel : n.rels()) {
        std::vector<RElem> row(s.gens(), RElem::zero(r));
        for (size_t j = 0; j < n.gens(); ++j) row[m.gens() + j] = rel[j];
        s.add_relation(std::move(row));
    }
    return s;
}

ModulePresentation tensor_power(const ModulePresentation& m, size_t n) {
    ModulePresentation t = ModulePresentation::free_module(m.ring(), 1);
    for (size_t k = 0; k < n; ++k) t = tensor_modules(t, m);
    return t;
}

// ---------------------------------------------------------------------------

HomModule hom_module(const ModulePresentation& m, const ModulePresentation& n) {
    check_same_ring(m, n);
    const Ring& r = m.ring();
    size_t ns = m.gens(), nd = n.gens();
    size_t ms = m.rels().size(), md = n.rels().size();

    // Unknowns: F (nd x ns, row-major), then per source relation an
    // auxiliary coefficient vector into the target relations.
    MatR sys = rmat(r, ms * nd, nd * ns + ms * md);
    for (size_t k = 0; k < ms; ++k) {
        const auto& rel = m.rels()[k];
        for (size_t i = 0; i < nd; ++i) {
            size_t row = k * nd + i;
            for (size_t j = 0; j < ns; ++j) sys(row, i * ns + j) = rel[j];
            for (size_t l = 0; l < md; ++l)
                sys(row, nd * ns + k * md + l) = -n.rels()[l][i];
        }
    }

    std::vector<MatR> gens;
    if (ms == 0) {
        // Free source: every matrix is a morphism.
        for (size_t i = 0; i < nd; ++i)
            for (size_t j = 0; j < ns; ++j) {
                MatR g = rmat(r, nd, ns);
                g(i, j) = RElem::one(r);
                gens.push_back(std::move(g));
            }
    } else {
        for (const auto& sol : ring_kernel_gens(r, sys)) {
            MatR g = rmat(r, nd, ns);
            bool nonzero = false;
            for (size_t i = 0; i < nd; ++i)
                for (size_t j = 0; j < ns; ++j) {
                    g(i, j) = sol[i * ns + j];
                    if (!g(i, j).is_zero()) nonzero = true;
                }
            if (nonzero) gens.push_back(std::move(g));
        }
    }

    // Morphisms that land inside the relation span of N are zero in Hom.
    std::vector<MatR> l0;
    for (size_t j = 0; j < ns; ++j)
        for (size_t l = 0; l < md; ++l) {
            MatR g = rmat(r, nd, ns);
            for (size_t i = 0; i < nd; ++i) g(i, j) = n.rels()[l][i];
            l0.push_back(std::move(g));
        }

    // Relations among the generators modulo L0: kernel of [vec(G) | vec(L0)]
    // projected onto the G-coordinates.
    size_t t = gens.size(), u = l0.size();
    MatR big = rmat(r, nd * ns, t + u);
    for (size_t col = 0; col < t; ++col) {
        auto v = vectorize(gens[col]);
        for (size_t i = 0; i < v.size(); ++i) big(i, col) = v[i];
    }
    for (size_t col = 0; col < u; ++col) {
        auto v = vectorize(l0[col]);
        for (size_t i = 0; i < v.size(); ++i) big(i, t + col) = v[i];
    }

    ModulePresentation pres(r, t);
    for (const auto& k : ring_kernel_gens(r, big)) {
        std::vector<RElem> row(k.begin(), k.begin() + t);
        bool nonzero = false;
        for (auto& e : row)
            if (!e.is_zero()) nonzero = true;
        if (nonzero) pres.add_relation(std::move(row));
    }

    return HomModule{std::move(pres), std::move(gens)};
}

// ---------------------------------------------------------------------------

bool is_symtrivial(const ModulePresentation& m) {
    ModMorphism s = tensor_symmetry(m, m);
    ModMorphism id = mod_identity(tensor_modules(m, m));
    return morphisms_equal(s, id);
}

LineReport line_classify(const ModulePresentation& m) {
    const Ring& r = m.ring();
    LineReport rep;
    ModulePresentation unit = ModulePresentation::free_module(r, 1);

    HomModule dual = hom_module(m, unit);
    rep.dual = dual.presentation;
    rep.dual_generators = dual.generators;

    size_t n = m.gens(), t = dual.generators.size();
    size_t mm = m.rels().size(), mdd = dual.presentation.rels().size();
    auto phi = [&](size_t k, size_t j) { return dual.generators[k](0, j); };

    // Dualizability: find a coevaluation c in M (x) D making both triangle
    // identities hold.  c has coordinates c_{a,k} on generators e_a (x) phi_k.
    {
        SysBuilder sb(r);
        size_t cvar = sb.add_vars(n * t);
        size_t y1 = sb.add_vars(n * mm);     // per column j of T1
        size_t y2 = sb.add_vars(t * mdd);    // per column l of T2
        // T1 (i,j): sum_k c_{i,k} phi_k(e_j) - (M rels)(i,.) y1_j = delta_ij
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                size_t row = sb.add_row(i == j ? RElem::one(r) : RElem::zero(r));
                for (size_t k = 0; k < t; ++k) sb.add_entry(row, cvar + i * t + k, phi(k, j));
                for (size_t l = 0; l < mm; ++l)
                    sb.add_entry(row, y1 + j * mm + l, -m.rels()[l][i]);
            }
        // T2 (k,l): sum_a c_{a,k} phi_l(e_a) - (D rels)(k,.) y2_l = delta_kl
        for (size_t k = 0; k < t; ++k)
            for (size_t l = 0; l < t; ++l) {
                size_t row = sb.add_row(k == l ? RElem::one(r) : RElem::zero(r));
                for (size_t a = 0; a < n; ++a) sb.add_entry(row, cvar + a * t + k, phi(l, a));
                for (size_t s = 0; s < mdd; ++s)
                    sb.add_entry(row, y2 + l * mdd + s, -dual.presentation.rels()[s][k]);
            }
        rep.dualizable = sb.solve().has_value();
    }

    // Invertibility: the evaluation D (x) M -> R admits a two-sided inverse.
    {
        ModulePresentation dm = tensor_modules(dual.presentation, m);
        size_t dmrels = dm.rels().size();
        SysBuilder sb(r);
        size_t gvar = sb.add_vars(t * n);
        size_t yvar = sb.add_vars(dm.gens() * dmrels);
        // e(g) = 1
        size_t row = sb.add_row(RElem::one(r));
        for (size_t k = 0; k < t; ++k)
            for (size_t i = 0; i < n; ++i)
                sb.add_entry(row, gvar + tensor_index(n, k, i), phi(k, i));
        // g o e = id on D (x) M, modulo its relations
        for (size_t e1 = 0; e1 < dm.gens(); ++e1)
            for (size_t c1 = 0; c1 < dm.gens(); ++c1) {
                size_t l = c1 / n, j = c1 % n;
                size_t rr = sb.add_row(e1 == c1 ? RElem::one(r) : RElem::zero(r));
                sb.add_entry(rr, gvar + e1, phi(l, j));
                for (size_t s = 0; s < dmrels; ++s)
                    sb.add_entry(rr, yvar + c1 * dmrels + s, -dm.rels()[s][e1]);
            }
        rep.invertible = sb.solve().has_value();
    }

    // Signature: solve S_{M,M} = r . id on M (x) M.
    {
        ModulePresentation t2 = tensor_modules(m, m);
        ModMorphism s = tensor_symmetry(m, m);
        size_t trels = t2.rels().size();
        SysBuilder sb(r);
        size_t rvar = sb.add_vars(1);
        size_t yvar = sb.add_vars(t2.gens() * trels);
        for (size_t i = 0; i < t2.gens(); ++i)
            for (size_t j = 0; j < t2.gens(); ++j) {
                size_t row = sb.add_row(s.mat()(i, j));
                if (i == j) sb.add_entry(row, rvar, RElem::one(r));
                for (size_t l = 0; l < trels; ++l)
                    sb.add_entry(row, yvar + j * trels + l, t2.rels()[l][i]);
            }
        auto sol = sb.solve();
        if (sol) {
            rep.has_signature = true;
            rep.signature = (*sol)[0];
        }
    }

    if (rep.invertible && !rep.has_signature)
        throw std::logic_error("internal consistency: invertible object without signature");
    if (rep.invertible && rep.has_signature) {
        rep.is_line = rep.signature == RElem::one(r);
        rep.is_antiline = rep.signature == -RElem::one(r);
    }
    return rep;
}

// ---------------------------------------------------------------------------

GradedModule graded_tensor(const GradedModule& a, const GradedModule& b) {
    if (a.twisted != b.twisted) throw std::invalid_argument("graded symmetry flag mismatch");
    if (!a.ring->same_as(*b.ring)) throw std::invalid_argument("ring mismatch");
    GradedModule t;
    t.ring = a.ring;
    t.twisted = a.twisted;
    for (const auto& [p, mp] : a.comps)
        for (const auto& [q, nq] : b.comps) {
            ModulePresentation piece = tensor_modules(mp, nq);
            if (piece.gens() == 0) continue;
            auto it = t.comps.find(p + q);
            if (it == t.comps.end()) t.comps.emplace(p + q, piece);
            else it->second = direct_sum(it->second, piece);
        }
    return t;
}

GradedModule graded_shift(const GradedModule& m, int d) {
    GradedModule s;
    s.ring = m.ring;
    s.twisted = m.twisted;
    for (const auto& [n, comp] : m.comps) s.comps.emplace(n - d, comp);
    return s;
}

GradedLineReport graded_line_classify(const GradedModule& m) {
    GradedLineReport rep;
    size_t total = 0, rank_of_single = 0;
    int deg = 0;
    for (const auto& [d, comp] : m.comps) {
        if (!comp.is_free_presentation())
            throw std::domain_error("graded_line_classify expects free components");
        if (comp.gens() == 0) continue;
        total += 1;
        rank_of_single = comp.gens();
        deg = d;
    }
    rep.invertible = (total == 1 && rank_of_single == 1);
    if (rep.invertible) {
        rep.has_signature = true;
        rep.signature = graded_symmetry_sign(m.twisted, deg, deg) == -1 ? Rat(-1) : Rat(1);
        rep.is_line = rep.signature == 1;
        rep.is_antiline = rep.signature == -1;
    }
    return rep;
}

// ---------------------------------------------------------------------------

OidReport oid_decompose(const Int& n) {
    OidReport rep;
    rep.n = n;
    for (Int e = 0; e < n; ++e)
        if (mod_floor(e * e, n) == e) rep.idempotents.push_back(e);

    // Enumerate sets of pairwise-orthogonal nonzero idempotents summing to 1.
    std::vector<Int> nonzero;
    for (const Int& e : rep.idempotents)
        if (e != 0) nonzero.push_back(e);

    std::vector<Int> current;
    std::function<void(size_t, Int)> rec = [&](size_t start, Int sum) {
        if (mod_floor(sum, n) == 1) {
            Oid oid{current};
            std::vector<Int> orders;
            for (const Int& e : current) orders.push_back(n / gcd(e, n));
            rep.decompositions.push_back(oid);
            rep.summand_orders.push_back(orders);
        }
        for (size_t i = start; i < nonzero.size(); ++i) {
            bool orth = true;
            for (const Int& e : current)
                if (mod_floor(e * nonzero[i], n) != 0) { orth = false; break; }
            if (!orth) continue;
            current.push_back(nonzero[i]);
            rec(i + 1, sum + nonzero[i]);
            current.pop_back();
        }
    };
    rec(0, 0);
    return rep;
}

// ---------------------------------------------------------------------------

bool ChainComplex::d_squared_zero() const {
    for (size_t i = 0; i + 1 < diff.size(); ++i) {
        MatC prod = mat_mul(diff[i + 1], diff[i], Coef(0, characteristic));
        for (size_t a = 0; a < prod.rows(); ++a)
            for (size_t b = 0; b < prod.cols(); ++b)
                if (!prod(a, b).is_zero()) return false;
    }
    return true;
}

std::vector<size_t> ChainComplex::cohomology_dims() const {
    std::vector<size_t> h;
    for (size_t i = 0; i < dims.size(); ++i) {
        size_t rank_out = i < diff.size() ? rank(diff[i]) : 0;
        size_t rank_in = i > 0 ? rank(diff[i - 1]) : 0;
        h.push_back(dims[i] - rank_out - rank_in);
    }
    return h;
}

ChainComplex amitsur_complex(const Ring& a, size_t m_dim, int length) {
    if (a->kind() != RingKind::PolyQuotient || !a->finite_dimensional())
        throw std::domain_error("amitsur_complex requires a finite-dimensional algebra");
    size_t d = a->monomial_basis().size();
    if (d == 0) throw std::domain_error("amitsur_complex over the zero algebra");
    unsigned long p = a->char_p();
    int one_index = a->basis_index(Monomial(a->vars().size(), 0));

    ChainComplex cc;
    cc.characteristic = p;
    size_t dim = m_dim;
    for (int i = 0; i <= length; ++i) {
        cc.dims.push_back(dim);
        dim *= d;
    }
    // Basis of M (x) A^{(x)k}: index = ((b*d + m_1)*d + m_2)... with b < m_dim.
    for (int k = 0; k + 1 <= length; ++k) {
        size_t src = cc.dims[k], dst = cc.dims[k + 1];
        MatC m(dst, src, Coef(0, p));
        for (size_t idx = 0; idx < src; ++idx) {
            // Decode the A-part of the index.
            std::vector<size_t> slots(k);
            size_t rest = idx;
            for (int s = k - 1; s >= 0; --s) {
                slots[s] = rest % d;
                rest /= d;
            }
            size_t b = rest;
            for (int pos = 0; pos <= k; ++pos) {
                // Insert the unit of A at slot `pos`.
                size_t out = b;
                for (int s = 0; s < pos; ++s) out = out * d + slots[s];
                out = out * d + static_cast<size_t>(one_index);
                for (int s = pos; s < k; ++s) out = out * d + slots[s];
                Coef sign((pos % 2 == 0) ? 1 : -1, p);
                m(out, idx) = m(out, idx) + sign;
            }
        }
        cc.diff.push_back(std::move(m));
    }
    return cc;
}

// ---------------------------------------------------------------------------

size_t module_dim(const ModulePresentation& m) {
    return quotient_dim_over_base(m.ring(), m.gens(), m.rel_cols());
}

std::vector<Int> module_invariants(const ModulePresentation& m) {
    const Ring& r = m.ring();
    if (r->kind() == RingKind::Integers) {
        MatZ rel(m.gens(), m.rels().size(), 0);
        for (size_t k = 0; k < m.rels().size(); ++k)
            for (size_t i = 0; i < m.gens(); ++i) rel(i, k) = m.rels()[k][i].int_value();
        return cokernel_invariants(rel);
    }
    if (r->kind() == RingKind::IntegersMod) {
        // Lift to ZZ with the modulus relations added.
        MatZ rel(m.gens(), m.rels().size() + m.gens(), 0);
        for (size_t k = 0; k < m.rels().size(); ++k)
            for (size_t i = 0; i < m.gens(); ++i) rel(i, k) = m.rels()[k][i].int_value();
        for (size_t i = 0; i < m.gens(); ++i) rel(i, m.rels().size() + i) = r->modulus();
        return cokernel_invariants(rel);
    }
    throw std::domain_error("module_invariants requires ZZ or ZZ/n");
}

}  // namespace catalg
