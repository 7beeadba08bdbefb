#include <catalg/linalg.hpp>

namespace catalg {

namespace {

bool field_like(const Ring& r) {
    return r->kind() == RingKind::Rationals ||
           (r->kind() == RingKind::IntegersMod && r->is_field());
}

Coef to_coef(const Ring& r, const RElem& e) {
    if (r->kind() == RingKind::Rationals) return Coef(e.rat_value());
    return Coef(Rat(e.int_value()), static_cast<unsigned long>(r->modulus().get_ui()));
}

RElem coef_to_elem(const Ring& r, const Coef& c) {
    if (r->kind() == RingKind::Rationals) return RElem::from_rat(r, c.value());
    return RElem::from_int(r, c.value().get_num());
}

MatZ lift_int(const MatR& a) {
    MatZ m(a.rows(), a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).int_value();
    return m;
}

// [A | n*I] used to solve modular systems over ZZ.
MatZ lift_mod(const MatR& a, const Int& n) {
    MatZ m(a.rows(), a.cols() + a.rows(), 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).int_value();
        m(i, a.cols() + i) = n;
    }
    return m;
}

}  // namespace

size_t base_block_size(const Ring& r) {
    if (field_like(r)) return 1;
    if (r->kind() == RingKind::PolyQuotient && r->finite_dimensional())
        return r->monomial_basis().size();
    throw std::domain_error("no finite base-field expansion for ring " + r->str());
}

std::vector<Coef> elem_coords(const Ring& r, const RElem& e) {
    if (field_like(r)) return {to_coef(r, e)};
    return basis_coords(e);
}

RElem elem_from_coords(const Ring& r, const std::vector<Coef>& c) {
    if (field_like(r)) return coef_to_elem(r, c[0]);
    return from_basis_coords(r, c);
}

MatC expand_to_base(const Ring& r, const MatR& a) {
    size_t d = base_block_size(r);
    unsigned long p = r->kind() == RingKind::PolyQuotient
                          ? r->char_p()
                          : (r->kind() == RingKind::Rationals ? 0 : r->modulus().get_ui());
    MatC m(a.rows() * d, a.cols() * d, Coef(0, p));
    bool scalar = field_like(r);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            if (scalar) {
                m(i, j) = to_coef(r, a(i, j));
            } else {
                auto block = regular_representation(a(i, j));
                for (size_t bi = 0; bi < d; ++bi)
                    for (size_t bj = 0; bj < d; ++bj) m(i * d + bi, j * d + bj) = block[bi][bj];
            }
        }
    return m;
}

std::optional<std::vector<RElem>> ring_solve(const Ring& r, const MatR& a,
                                             const std::vector<RElem>& b) {
    switch (r->kind()) {
        case RingKind::Rationals: {
            MatC m = expand_to_base(r, a);
            std::vector<Coef> bc;
            for (auto& e : b) bc.push_back(to_coef(r, e));
            auto x = field_solve(m, bc);
            if (!x) return std::nullopt;
            std::vector<RElem> out;
            for (auto& c : *x) out.push_back(coef_to_elem(r, c));
            return out;
        }
        case RingKind::Integers: {
            std::vector<Int> bi;
            for (auto& e : b) bi.push_back(e.int_value());
            auto x = integer_solve(lift_int(a), bi);
            if (!x) return std::nullopt;
            std::vector<RElem> out;
            for (auto& z : *x) out.push_back(RElem::from_int(r, z));
            return out;
        }
        case RingKind::IntegersMod: {
            if (r->is_field()) {
                MatC m = expand_to_base(r, a);
                std::vector<Coef> bc;
                for (auto& e : b) bc.push_back(to_coef(r, e));
                auto x = field_solve(m, bc);
                if (!x) return std::nullopt;
                std::vector<RElem> out;
                for (auto& c : *x) out.push_back(coef_to_elem(r, c));
                return out;
            }
            std::vector<Int> bi;
            for (auto& e : b) bi.push_back(e.int_value());
            auto x = integer_solve(lift_mod(a, r->modulus()), bi);
            if (!x) return std::nullopt;
            std::vector<RElem> out;
            for (size_t j = 0; j < a.cols(); ++j) out.push_back(RElem::from_int(r, (*x)[j]));
            return out;
        }
        case RingKind::PolyQuotient: {
            size_t d = base_block_size(r);
            MatC m = expand_to_base(r, a);
            std::vector<Coef> bc;
            for (auto& e : b) {
                auto c = elem_coords(r, e);
                bc.insert(bc.end(), c.begin(), c.end());
            }
            auto x = field_solve(m, bc);
            if (!x) return std::nullopt;
            std::vector<RElem> out;
            for (size_t j = 0; j < a.cols(); ++j) {
                std::vector<Coef> c(x->begin() + j * d, x->begin() + (j + 1) * d);
                out.push_back(elem_from_coords(r, c));
            }
            return out;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<RElem>> ring_kernel_gens(const Ring& r, const MatR& a) {
    std::vector<std::vector<RElem>> out;
    switch (r->kind()) {
        case RingKind::Rationals: {
            for (auto& k : field_kernel(expand_to_base(r, a))) {
                std::vector<RElem> v;
                for (auto& c : k) v.push_back(coef_to_elem(r, c));
                out.push_back(std::move(v));
            }
            return out;
        }
        case RingKind::Integers: {
            for (auto& k : integer_kernel(lift_int(a))) {
                std::vector<RElem> v;
                for (auto& z : k) v.push_back(RElem::from_int(r, z));
                out.push_back(std::move(v));
            }
            return out;
        }
        case RingKind::IntegersMod: {
            if (r->is_field()) {
                for (auto& k : field_kernel(expand_to_base(r, a))) {
                    std::vector<RElem> v;
                    for (auto& c : k) v.push_back(coef_to_elem(r, c));
                    out.push_back(std::move(v));
                }
                return out;
            }
            for (auto& k : integer_kernel(lift_mod(a, r->modulus()))) {
                std::vector<RElem> v;
                bool nonzero = false;
                for (size_t j = 0; j < a.cols(); ++j) {
                    RElem e = RElem::from_int(r, k[j]);
                    if (!e.is_zero()) nonzero = true;
                    v.push_back(e);
                }
                if (nonzero) out.push_back(std::move(v));
            }
            return out;
        }
        case RingKind::PolyQuotient: {
            size_t d = base_block_size(r);
            for (auto& k : field_kernel(expand_to_base(r, a))) {
                std::vector<RElem> v;
                bool nonzero = false;
                for (size_t j = 0; j < a.cols(); ++j) {
                    std::vector<Coef> c(k.begin() + j * d, k.begin() + (j + 1) * d);
                    RElem e = elem_from_coords(r, c);
                    if (!e.is_zero()) nonzero = true;
                    v.push_back(e);
                }
                if (nonzero) out.push_back(std::move(v));
            }
            return out;
        }
    }
    return out;
}

size_t quotient_dim_over_base(const Ring& r, size_t gens, const MatR& rel_cols) {
    size_t d = base_block_size(r);
    if (gens == 0) return 0;
    if (rel_cols.cols() == 0) return gens * d;
    MatC m = expand_to_base(r, rel_cols);
    return gens * d - rank(m);
}

std::optional<RElem> RElem::inverse_findim() const {
    if (!ring_->finite_dimensional())
        throw std::domain_error("unit test over infinite-dimensional quotient ring");
    MatR m(1, 1, *this);
    auto sol = ring_solve(ring_, m, {RElem::one(ring_)});
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

}  // namespace catalg
