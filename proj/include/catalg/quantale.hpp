#pragma once

// Quantales as decategorified cocomplete tensor categories: the ideal
// quantale of ZZ with its prime spectrum and Zariski laws, finite quantales
// given by tables, and the localization of the dyadic unit interval at 1/2.

#include <catalg/numeric.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace catalg {

// Principal ideal (n) of ZZ, canonical generator n >= 0; (0) is the zero
// ideal and (1) the unit.  sup = gcd, product = multiplication, and the
// order is divisibility: (a) <= (b) iff b | a.
struct IdealZ {
    Int gen;
};

inline IdealZ ideal_sum(const IdealZ& a, const IdealZ& b) { return {gcd(a.gen, b.gen)}; }
inline IdealZ ideal_product(const IdealZ& a, const IdealZ& b) { return {a.gen * b.gen}; }
inline bool ideal_leq(const IdealZ& a, const IdealZ& b) {
    if (b.gen == 0) return a.gen == 0;
    return a.gen % b.gen == 0;
}
IdealZ ideal_residual(const IdealZ& b, const IdealZ& a);  // [b : a]

bool ideal_is_prime_factorization(const IdealZ& p);
// Def-4.2.6 quantifier over ideals (a), (b) with a, b <= bound.
bool ideal_is_prime_bruteforce(const IdealZ& p, const Int& bound);

// Primes of the truncated spectrum: (0) and (p) for primes p <= bound.
std::vector<IdealZ> spectrum_z(const Int& max_prime);
// V(I) within the truncated spectrum.
std::vector<IdealZ> vanishing_set(const IdealZ& i, const Int& max_prime);

struct ZariskiReport {
    bool unit_zero_laws = false;  // V((1)) empty, V((0)) everything
    bool product_law = true;      // V(I J) = V(I) cup V(J)
    bool sum_law = true;          // V(I + J) = V(I) cap V(J) pairwise
};

ZariskiReport zariski_laws_check(const std::vector<IdealZ>& sample, const Int& max_prime);

// ---------------------------------------------------------------------------

// A finite quantale given by sup/product tables on {0..size-1}.
struct FiniteQuantale {
    int size = 0;
    std::vector<std::vector<int>> join;  // binary sup
    std::vector<std::vector<int>> prod;
    int unit = 0;
    int bottom = 0;

    bool leq(int a, int b) const { return join[a][b] == b; }
    bool axioms_hold() const;  // commutativity, associativity, unit,
                               // distributivity of prod over binary sup
    // largest z with z * a <= b (exists by distributivity; found by scan)
    int residual(int b, int a) const;
};

// The quantale of divisors of n (ideals of Z/n), a handy finite instance.
FiniteQuantale divisor_quantale(long n);

// ---------------------------------------------------------------------------
// Dyadic unit interval and its localization at 1/2 (Example-5.8.21 shape).

bool is_dyadic(const Rat& q);
// Largest element z of [0,1] with z * a <= b, as an exact rational.
Rat dyadic_residual(const Rat& b, const Rat& a);

// A 1/2-sequence: dyadic values on a window, constant-or-geometric head
// (n < n0) and constant-or-halving tail (n > n1); the class contains every
// reflector fixed point min(2^{-n} v, 1) and is closed under sup, graded
// product, and reflection.
struct HalfSequence {
    enum class Head { Constant, Geometric };  // t_n = t_{n0} or t_{n0} 2^{n-n0}
    enum class Tail { Constant, Halving };    // t_n = t_{n1} or t_{n1} 2^{n1-n}

    long n0 = 0, n1 = 0;
    std::vector<Rat> vals;  // vals[k] = t_{n0+k}
    Head head = Head::Constant;
    Tail tail = Tail::Halving;

    Rat at(long n) const;
    bool valid() const;  // dyadic in [0,1], t_n <= 2 t_{n+1} everywhere
};

struct ExtValue {
    bool infinite = false;
    Rat v;  // finite value when !infinite
    bool operator==(const ExtValue& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
};

ExtValue ext_mul(const ExtValue& a, const ExtValue& b);  // oo * 0 = 0
ExtValue ext_max(const ExtValue& a, const ExtValue& b);

// sup_n 2^n t_n in [0, oo].
ExtValue half_value(const HalfSequence& m);
// t_n = min(2^{-n} v, 1).
HalfSequence fixed_sequence(const ExtValue& v);
// R_1(M)_n = min(2 t_{n+1}, 1).
HalfSequence reflect_once(const HalfSequence& m);
bool is_reflection_fixed(const HalfSequence& m);

HalfSequence half_sup(const HalfSequence& a, const HalfSequence& b);
// graded product (M N)_n = sup_{p+q=n} M_p N_q.
HalfSequence half_product(const HalfSequence& a, const HalfSequence& b);

struct LocalizeResult {
    ExtValue value;
    HalfSequence fixed;
    bool fixed_point_verified = false;
};

LocalizeResult localize_half(const HalfSequence& m);

struct HalfIsoReport {
    bool product_matches = true;  // value(R(M N)) = value(M) value(N)
    bool sup_matches = true;      // value(M sup N) = max of values
    bool unit_matches = true;     // value of the unit fixed sequence is 1
};

HalfIsoReport localize_iso_check(const std::vector<std::pair<ExtValue, ExtValue>>& samples);

}  // namespace catalg
