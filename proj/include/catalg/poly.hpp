#pragma once

// Sparse multivariate polynomials over an exact coefficient field (QQ or
// GF(p)).  Monomial order is graded reverse lexicographic throughout.

#include <catalg/numeric.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catalg {

// Element of QQ (p == 0) or GF(p), p prime.  GF(p) values are kept
// normalized to representatives in [0, p).
class Coef {
  public:
    Coef() : p_(0) {}
    Coef(const Rat& q, unsigned long p = 0) : q_(q), p_(p) { normalize(); }
    Coef(long n, unsigned long p = 0) : q_(n), p_(p) { normalize(); }

    unsigned long characteristic() const { return p_; }
    const Rat& value() const { return q_; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Coef operator+(const Coef& o) const { check(o); return Coef(q_ + o.q_, p_); }
    Coef operator-(const Coef& o) const { check(o); return Coef(q_ - o.q_, p_); }
    Coef operator*(const Coef& o) const { check(o); return Coef(q_ * o.q_, p_); }
    Coef operator-() const { return Coef(-q_, p_); }

    Coef inverse() const {
        if (is_zero()) throw std::domain_error("Coef: division by zero");
        if (p_ == 0) return Coef(Rat(1) / q_, 0);
        return Coef(Rat(mod_inverse(q_.get_num(), Int(p_))), p_);
    }

    Coef operator/(const Coef& o) const { return *this * o.inverse(); }

    bool operator==(const Coef& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Coef& o) const { return !(*this == o); }

    std::string str() const { return q_.get_str(); }

  private:
    void normalize() {
        if (p_ != 0) {
            // Incoming rationals over GF(p) must have unit denominators mod p.
            Int num = q_.get_num(), den = q_.get_den();
            Int v = mod_floor(num * mod_inverse(den, Int(p_)), Int(p_));
            q_ = Rat(v);
        }
    }
    void check(const Coef& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Coef: characteristic mismatch");
    }

    Rat q_;
    unsigned long p_;
};

// Exponent vector; length equals the ambient variable count.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mon_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mon_div(const Monomial& b, const Monomial& a) {  // b / a
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// true iff a < b in degrevlex.
inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Equal degree: a < b iff the rightmost nonzero entry of a-b is positive.
    for (size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

// Terms are kept in descending degrevlex order, so the leading term is first.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Coef, DegRevLexGreater>;

    Polynomial() : nvars_(0), p_(0) {}
    Polynomial(size_t nvars, unsigned long p) : nvars_(nvars), p_(p) {}

    static Polynomial constant(const Coef& c, size_t nvars) {
        Polynomial f(nvars, c.characteristic());
        if (!c.is_zero()) f.terms_[Monomial(nvars, 0)] = c;
        return f;
    }

    static Polynomial variable(size_t i, size_t nvars, unsigned long p) {
        Polynomial f(nvars, p);
        Monomial m(nvars, 0);
        m[i] = 1;
        f.terms_[m] = Coef(1, p);
        return f;
    }

    static Polynomial monomial(const Monomial& m, const Coef& c) {
        Polynomial f(m.size(), c.characteristic());
        if (!c.is_zero()) f.terms_[m] = c;
        return f;
    }

    size_t nvars() const { return nvars_; }
    unsigned long characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::domain_error("leading_monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const Coef& leading_coef() const {
        if (is_zero()) throw std::domain_error("leading_coef of zero polynomial");
        return terms_.begin()->second;
    }

    int degree() const { return is_zero() ? -1 : total_degree(leading_monomial()); }

    void add_term(const Monomial& m, const Coef& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            Coef s = it->second + c;
            if (s.is_zero()) terms_.erase(it);
            else it->second = s;
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(nvars_, p_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(nvars_, p_);
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) r.add_term(mon_mul(ma, mb), ca * cb);
        return r;
    }
    Polynomial operator*(const Coef& c) const {
        Polynomial r(nvars_, p_);
        if (c.is_zero()) return r;
        for (auto& [m, tc] : terms_) r.terms_[m] = tc * c;
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * leading_coef().inverse();
    }

    Polynomial pow(int e) const {
        Polynomial r = constant(Coef(1, p_), nvars_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Formal partial derivative with respect to variable i.
    Polynomial derivative(size_t i) const {
        Polynomial r(nvars_, p_);
        for (auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial m2 = m;
            m2[i] -= 1;
            r.add_term(m2, c * Coef(m[i], p_));
        }
        return r;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rat q = c.value();
            bool neg = q < 0;
            Rat aq = neg ? Rat(-q) : q;
            std::string mono;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars[i];
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            std::string coefs;
            if (mono.empty()) coefs = aq.get_str();
            else if (aq != 1) coefs = aq.get_str() + "*";
            if (first) {
                out += (neg ? "-" : "") + coefs + mono;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + coefs + mono;
            }
        }
        return out;
    }

  private:
    size_t nvars_;
    unsigned long p_;
    TermMap terms_;
};

}  // namespace catalg
