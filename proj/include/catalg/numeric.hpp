#pragma once

// Exact scalar arithmetic. Integers and rationals are GMP-backed; no
// floating point appears anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Floor division remainder in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Inverse of a mod m; throws if not a unit.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: " + a.get_str() + " is not a unit mod " + m.get_str());
    return r;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat rat(long num, long den = 1) { Rat q(num, den); q.canonicalize(); return q; }

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Trial-division factorization; intended for desk-scale moduli only.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> fc;
    if (n <= 1) return fc;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fc.emplace_back(p, e);
        }
    }
    if (n > 1) fc.emplace_back(n, 1);
    return fc;
}

// Deterministic splitmix-style generator; used so that seeded reports are
// byte-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rat rational(long max_abs_num, long max_den) {
        long num = range(-max_abs_num, max_abs_num);
        long den = range(1, max_den);
        return rat(num, den);
    }

  private:
    std::uint64_t state_;
};

}  // namespace catalg
