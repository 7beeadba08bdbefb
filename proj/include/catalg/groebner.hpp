#pragma once

// Buchberger's algorithm with normal-pair selection and full autoreduction.
// Coefficients must lie in a field (QQ or GF(p)); desk-scale inputs only.

#include <catalg/poly.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace catalg {

// Full reduction of f modulo G: every term of the remainder is reduced.
inline Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis) {
    if (basis.empty()) return f;
    Polynomial r(f.nvars(), f.characteristic());
    while (!f.is_zero()) {
        bool reduced = false;
        const Monomial& lm = f.leading_monomial();
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            if (mon_divides(g.leading_monomial(), lm)) {
                Coef factor = f.leading_coef() / g.leading_coef();
                Monomial shift = mon_div(lm, g.leading_monomial());
                f = f - g * Polynomial::monomial(shift, factor);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(f.leading_monomial(), f.leading_coef());
            Polynomial head = Polynomial::monomial(f.leading_monomial(), f.leading_coef());
            f = f - head;
        }
    }
    return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = mon_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = Polynomial::monomial(mon_div(l, f.leading_monomial()),
                                        f.leading_coef().inverse());
    Polynomial b = Polynomial::monomial(mon_div(l, g.leading_monomial()),
                                        g.leading_coef().inverse());
    return f * a - g * b;
}

// Reduced Groebner basis (degrevlex), sorted by leading monomial ascending.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return basis;

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return degrevlex_less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, mon_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        // Normal selection: treat the pair with the smallest lcm first.
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);

        const Polynomial& f = basis[p.i];
        const Polynomial& g = basis[p.j];
        // Buchberger's first criterion: coprime leading monomials.
        if (mon_mul(f.leading_monomial(), g.leading_monomial()) == p.lcm) continue;

        Polynomial s = normal_form(s_polynomial(f, g), basis);
        if (!s.is_zero()) {
            basis.push_back(s.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // Autoreduce: drop elements whose leading monomial is divisible by
    // another one, then fully reduce each element modulo the rest.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> rest;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) rest.push_back(basis[j]);
            Polynomial r = normal_form(basis[i], rest);
            if (r.is_zero()) {
                basis.erase(basis.begin() + i);
                changed = true;
                break;
            }
            r = r.monic();
            if (r != basis[i]) {
                basis[i] = r;
                changed = true;
            }
        }
    }

    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return degrevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return basis;
}

}  // namespace catalg
