#pragma once

// Ring descriptors and their elements.  Supported rings: ZZ, QQ, ZZ/n, and
// polynomial quotients k[x1..xn]/I over k = QQ or GF(p).  Quotient rings
// carry a reduced degrevlex Groebner basis computed at construction, so
// every element has a canonical normal form.

#include <catalg/groebner.hpp>

#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace catalg {

enum class RingKind { Integers, Rationals, IntegersMod, PolyQuotient };

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

class RingDescriptor {
  public:
    static Ring integers() { return make(RingKind::Integers); }
    static Ring rationals() { return make(RingKind::Rationals); }

    static Ring integers_mod(const Int& n) {
        if (n < 2) throw std::invalid_argument("IntegersMod requires n >= 2");
        auto r = make(RingKind::IntegersMod);
        r->modulus_ = n;
        return finish(r);
    }

    // base characteristic 0 means QQ; otherwise GF(p) with p prime.
    static Ring poly_quotient(unsigned long char_p, std::vector<std::string> vars,
                              std::vector<Polynomial> ideal_gens) {
        if (char_p != 0 && !is_probable_prime(Int(char_p)))
            throw std::invalid_argument("PolyQuotient base must be QQ or GF(p) with p prime");
        auto r = make(RingKind::PolyQuotient);
        r->char_p_ = char_p;
        r->vars_ = std::move(vars);
        for (auto& g : ideal_gens) {
            if (g.nvars() != r->vars_.size())
                throw std::invalid_argument("ideal generator arity mismatch");
            if (g.characteristic() != char_p)
                throw std::invalid_argument("ideal generator characteristic mismatch");
        }
        r->ideal_ = std::move(ideal_gens);
        r->gb_ = groebner_basis(r->ideal_);
        r->compute_basis();
        return finish(r);
    }

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    unsigned long char_p() const { return char_p_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& ideal_gens() const { return ideal_; }
    const std::vector<Polynomial>& groebner() const { return gb_; }
    bool finite_dimensional() const { return finite_dim_; }
    const std::vector<Monomial>& monomial_basis() const {
        if (!finite_dim_) throw std::domain_error("ring is not finite-dimensional over its base field");
        return basis_;
    }
    int basis_index(const Monomial& m) const {
        auto it = basis_index_.find(m);
        if (it == basis_index_.end()) throw std::domain_error("monomial not in basis");
        return it->second;
    }

    bool is_field() const {
        switch (kind_) {
            case RingKind::Rationals: return true;
            case RingKind::IntegersMod: return is_probable_prime(modulus_);
            default: return false;
        }
    }

    // Characteristic of the ring itself (not of the coefficient field).
    Int characteristic() const {
        switch (kind_) {
            case RingKind::Integers:
            case RingKind::Rationals: return 0;
            case RingKind::IntegersMod: return modulus_;
            case RingKind::PolyQuotient: return Int(char_p_);
        }
        return 0;
    }

    std::string str() const {
        switch (kind_) {
            case RingKind::Integers: return "ZZ";
            case RingKind::Rationals: return "QQ";
            case RingKind::IntegersMod: return "ZZ/" + modulus_.get_str();
            case RingKind::PolyQuotient: {
                std::string s = char_p_ == 0 ? "QQ" : "ZZ/" + std::to_string(char_p_);
                s += "[";
                for (size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
                s += "]";
                if (!ideal_.empty()) {
                    s += "/(";
                    for (size_t i = 0; i < ideal_.size(); ++i)
                        s += (i ? ", " : "") + ideal_[i].str(vars_);
                    s += ")";
                }
                return s;
            }
        }
        return "";
    }

    bool same_as(const RingDescriptor& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case RingKind::IntegersMod: return modulus_ == o.modulus_;
            case RingKind::PolyQuotient:
                return char_p_ == o.char_p_ && vars_ == o.vars_ && gb_ == o.gb_;
            default: return true;
        }
    }

  private:
    static std::shared_ptr<RingDescriptor> make(RingKind k) {
        auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
        r->kind_ = k;
        return r;
    }
    static Ring finish(std::shared_ptr<RingDescriptor> r) { return r; }

    RingDescriptor() = default;

    void compute_basis() {
        finite_dim_ = false;
        basis_.clear();
        basis_index_.clear();
        size_t n = vars_.size();
        // The quotient is finite-dimensional iff each variable has a pure
        // power among the leading monomials of the Groebner basis.
        std::vector<int> bound(n, -1);
        bool unit_ideal = false;
        for (const Polynomial& g : gb_) {
            const Monomial& lm = g.leading_monomial();
            if (total_degree(lm) == 0) unit_ideal = true;
            for (size_t i = 0; i < n; ++i) {
                bool pure = lm[i] > 0;
                for (size_t j = 0; pure && j < n; ++j)
                    if (j != i && lm[j] > 0) pure = false;
                if (pure && (bound[i] < 0 || lm[i] < bound[i])) bound[i] = lm[i];
            }
        }
        if (unit_ideal) {  // zero ring
            finite_dim_ = true;
            return;
        }
        for (size_t i = 0; i < n; ++i)
            if (bound[i] < 0) return;  // infinite-dimensional

        finite_dim_ = true;
        Monomial m(n, 0);
        enumerate_basis(m, 0, bound);
        int idx = 0;
        for (const Monomial& b : basis_) basis_index_[b] = idx++;
    }

    void enumerate_basis(Monomial& m, size_t i, const std::vector<int>& bound) {
        if (i == m.size()) {
            for (const Polynomial& g : gb_)
                if (mon_divides(g.leading_monomial(), m)) return;
            basis_.push_back(m);
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            m[i] = e;
            enumerate_basis(m, i + 1, bound);
        }
        m[i] = 0;
    }

    RingKind kind_ = RingKind::Integers;
    Int modulus_;
    unsigned long char_p_ = 0;
    std::vector<std::string> vars_;
    std::vector<Polynomial> ideal_;
    std::vector<Polynomial> gb_;
    bool finite_dim_ = true;
    std::vector<Monomial> basis_;
    std::map<Monomial, int> basis_index_;
};

// An element of a ring, always stored in canonical form: ZZ/n values lie in
// [0, n), quotient-ring polynomials are degrevlex normal forms.
class RElem {
  public:
    RElem() = default;

    static RElem zero(const Ring& r) { return from_int(r, 0); }
    static RElem one(const Ring& r) { return from_int(r, 1); }

    static RElem from_int(const Ring& r, const Int& n) {
        RElem e;
        e.ring_ = r;
        switch (r->kind()) {
            case RingKind::Integers: e.z_ = n; break;
            case RingKind::Rationals: e.q_ = Rat(n); break;
            case RingKind::IntegersMod: e.z_ = mod_floor(n, r->modulus()); break;
            case RingKind::PolyQuotient:
                e.poly_ = normal_form(
                    Polynomial::constant(Coef(Rat(n), r->char_p()), r->vars().size()),
                    r->groebner());
                break;
        }
        return e;
    }

    static RElem from_rat(const Ring& r, const Rat& q) {
        if (r->kind() == RingKind::Rationals) {
            RElem e;
            e.ring_ = r;
            e.q_ = q;
            return e;
        }
        if (r->kind() == RingKind::PolyQuotient && r->char_p() == 0) {
            RElem e;
            e.ring_ = r;
            e.poly_ = normal_form(Polynomial::constant(Coef(q), r->vars().size()), r->groebner());
            return e;
        }
        if (is_integer(q)) return from_int(r, q.get_num());
        // Division by the denominator when it is a unit.
        RElem num = from_int(r, q.get_num());
        RElem den = from_int(r, q.get_den());
        auto inv = den.inverse();
        if (!inv) throw std::domain_error("rational scalar not representable in ring");
        return num * *inv;
    }

    static RElem from_poly(const Ring& r, const Polynomial& p) {
        if (r->kind() != RingKind::PolyQuotient)
            throw std::invalid_argument("polynomial element in non-polynomial ring");
        if (p.nvars() != r->vars().size()) throw std::invalid_argument("variable arity mismatch");
        RElem e;
        e.ring_ = r;
        e.poly_ = normal_form(p, r->groebner());
        return e;
    }

    static RElem variable(const Ring& r, size_t i) {
        return from_poly(r, Polynomial::variable(i, r->vars().size(), r->char_p()));
    }

    const Ring& ring() const { return ring_; }
    const Int& int_value() const { return z_; }
    const Rat& rat_value() const { return q_; }
    const Polynomial& poly_value() const { return poly_; }

    bool is_zero() const {
        switch (ring_->kind()) {
            case RingKind::Integers:
            case RingKind::IntegersMod: return z_ == 0;
            case RingKind::Rationals: return q_ == 0;
            case RingKind::PolyQuotient: return poly_.is_zero();
        }
        return true;
    }

    bool is_one() const { return *this == one(ring_); }

    RElem operator+(const RElem& o) const {
        check(o);
        RElem e;
        e.ring_ = ring_;
        switch (ring_->kind()) {
            case RingKind::Integers: e.z_ = z_ + o.z_; break;
            case RingKind::IntegersMod: e.z_ = mod_floor(z_ + o.z_, ring_->modulus()); break;
            case RingKind::Rationals: e.q_ = q_ + o.q_; break;
            case RingKind::PolyQuotient: e.poly_ = poly_ + o.poly_; break;
        }
        return e;
    }

    RElem operator-(const RElem& o) const { return *this + (-o); }

    RElem operator-() const {
        RElem e;
        e.ring_ = ring_;
        switch (ring_->kind()) {
            case RingKind::Integers: e.z_ = -z_; break;
            case RingKind::IntegersMod: e.z_ = mod_floor(-z_, ring_->modulus()); break;
            case RingKind::Rationals: e.q_ = -q_; break;
            case RingKind::PolyQuotient: e.poly_ = -poly_; break;
        }
        return e;
    }

    RElem operator*(const RElem& o) const {
        check(o);
        RElem e;
        e.ring_ = ring_;
        switch (ring_->kind()) {
            case RingKind::Integers: e.z_ = z_ * o.z_; break;
            case RingKind::IntegersMod: e.z_ = mod_floor(z_ * o.z_, ring_->modulus()); break;
            case RingKind::Rationals: e.q_ = q_ * o.q_; break;
            case RingKind::PolyQuotient:
                e.poly_ = normal_form(poly_ * o.poly_, ring_->groebner());
                break;
        }
        return e;
    }

    bool operator==(const RElem& o) const {
        check(o);
        switch (ring_->kind()) {
            case RingKind::Integers:
            case RingKind::IntegersMod: return z_ == o.z_;
            case RingKind::Rationals: return q_ == o.q_;
            case RingKind::PolyQuotient: return poly_ == o.poly_;
        }
        return false;
    }
    bool operator!=(const RElem& o) const { return !(*this == o); }

    std::optional<RElem> inverse() const {
        RElem e;
        e.ring_ = ring_;
        switch (ring_->kind()) {
            case RingKind::Integers:
                if (z_ == 1 || z_ == -1) { e.z_ = z_; return e; }
                return std::nullopt;
            case RingKind::IntegersMod: {
                if (gcd(z_, ring_->modulus()) != 1) return std::nullopt;
                e.z_ = mod_inverse(z_, ring_->modulus());
                return e;
            }
            case RingKind::Rationals:
                if (q_ == 0) return std::nullopt;
                e.q_ = Rat(1) / q_;
                return e;
            case RingKind::PolyQuotient: {
                if (poly_.is_zero()) return std::nullopt;
                if (poly_.degree() == 0) {
                    e.poly_ = Polynomial::constant(poly_.leading_coef().inverse(),
                                                   poly_.nvars());
                    return e;
                }
                // Solve u * this = 1 on the monomial basis (finite case only).
                return inverse_findim();
            }
        }
        return std::nullopt;
    }

    bool is_unit() const { return inverse().has_value(); }

    std::string str() const {
        switch (ring_->kind()) {
            case RingKind::Integers:
            case RingKind::IntegersMod: return z_.get_str();
            case RingKind::Rationals: return q_.get_str();
            case RingKind::PolyQuotient: return poly_.str(ring_->vars());
        }
        return "";
    }

  private:
    void check(const RElem& o) const {
        if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
            throw std::invalid_argument("ring mismatch");
    }

    std::optional<RElem> inverse_findim() const;

    Ring ring_;
    Int z_;
    Rat q_;
    Polynomial poly_;
};

// Coordinates of a quotient-ring element on the monomial basis.
inline std::vector<Coef> basis_coords(const RElem& e) {
    const Ring& r = e.ring();
    const auto& basis = r->monomial_basis();
    std::vector<Coef> out(basis.size(), Coef(0, r->char_p()));
    for (auto& [m, c] : e.poly_value().terms()) out[r->basis_index(m)] = c;
    return out;
}

inline RElem from_basis_coords(const Ring& r, const std::vector<Coef>& coords) {
    Polynomial p(r->vars().size(), r->char_p());
    const auto& basis = r->monomial_basis();
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) p.add_term(basis[i], coords[i]);
    return RElem::from_poly(r, p);
}

// D x D matrix of multiplication by e on the monomial basis, column-major
// action: column j holds the coordinates of e * basis[j].
inline std::vector<std::vector<Coef>> regular_representation(const RElem& e) {
    const Ring& r = e.ring();
    const auto& basis = r->monomial_basis();
    size_t d = basis.size();
    std::vector<std::vector<Coef>> m(d, std::vector<Coef>(d, Coef(0, r->char_p())));
    for (size_t j = 0; j < d; ++j) {
        RElem col = e * RElem::from_poly(r, Polynomial::monomial(basis[j], Coef(1, r->char_p())));
        std::vector<Coef> coords = basis_coords(col);
        for (size_t i = 0; i < d; ++i) m[i][j] = coords[i];
    }
    return m;
}

}  // namespace catalg
