#include <catalg/quantale.hpp>

#include <algorithm>
#include <set>

namespace catalg {

IdealZ ideal_residual(const IdealZ& b, const IdealZ& a) {
    // largest (z) with (z a) <= (b), i.e. b | z a
    if (a.gen == 0) return {1};           // z * 0 = 0 is in every ideal
    if (b.gen == 0) return {0};           // z a = 0 forces z = 0
    return {b.gen / gcd(a.gen, b.gen)};
}

bool ideal_is_prime_factorization(const IdealZ& p) {
    if (p.gen == 0) return true;  // ZZ is a domain
    if (p.gen == 1) return false; // the unit ideal is excluded
    return is_probable_prime(p.gen) && factorize(p.gen).size() == 1 &&
           factorize(p.gen)[0].second == 1;
}

bool ideal_is_prime_bruteforce(const IdealZ& p, const Int& bound) {
    if (p.gen == 1) return false;
    for (Int a = 1; a <= bound; ++a)
        for (Int b = 1; b <= bound; ++b) {
            IdealZ prod = ideal_product({a}, {b});
            if (ideal_leq(prod, p) && !ideal_leq({a}, p) && !ideal_leq({b}, p)) return false;
        }
    return true;
}

std::vector<IdealZ> spectrum_z(const Int& max_prime) {
    std::vector<IdealZ> out;
    out.push_back({0});
    for (Int p = 2; p <= max_prime; ++p)
        if (is_probable_prime(p)) out.push_back({p});
    return out;
}

std::vector<IdealZ> vanishing_set(const IdealZ& i, const Int& max_prime) {
    std::vector<IdealZ> out;
    for (const IdealZ& p : spectrum_z(max_prime))
        if (ideal_leq(i, p)) out.push_back(p);
    return out;
}

namespace {

std::set<Int> gens_of(const std::vector<IdealZ>& v) {
    std::set<Int> out;
    for (auto& i : v) out.insert(i.gen);
    return out;
}

}  // namespace

ZariskiReport zariski_laws_check(const std::vector<IdealZ>& sample, const Int& max_prime) {
    ZariskiReport rep;
    rep.unit_zero_laws = vanishing_set({1}, max_prime).empty() &&
                         vanishing_set({0}, max_prime).size() ==
                             spectrum_z(max_prime).size();
    for (const IdealZ& i : sample)
        for (const IdealZ& j : sample) {
            auto vi = gens_of(vanishing_set(i, max_prime));
            auto vj = gens_of(vanishing_set(j, max_prime));
            std::set<Int> inter, uni;
            std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                                  std::inserter(inter, inter.begin()));
            std::set_union(vi.begin(), vi.end(), vj.begin(), vj.end(),
                           std::inserter(uni, uni.begin()));
            // A prime contains I J iff it contains I or J, so products go to
            // unions; sums of ideals go to intersections.
            if (gens_of(vanishing_set(ideal_product(i, j), max_prime)) != uni)
                rep.product_law = false;
            if (gens_of(vanishing_set(ideal_sum(i, j), max_prime)) != inter)
                rep.sum_law = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------

bool FiniteQuantale::axioms_hold() const {
    for (int a = 0; a < size; ++a) {
        if (prod[a][unit] != a || prod[unit][a] != a) return false;
        if (join[a][bottom] != a) return false;
        for (int b = 0; b < size; ++b) {
            if (join[a][b] != join[b][a] || prod[a][b] != prod[b][a]) return false;
            for (int c = 0; c < size; ++c) {
                if (join[join[a][b]][c] != join[a][join[b][c]]) return false;
                if (prod[prod[a][b]][c] != prod[a][prod[b][c]]) return false;
                // product distributes over binary sup
                if (prod[a][join[b][c]] != join[prod[a][b]][prod[a][c]]) return false;
            }
        }
        if (join[a][a] != a) return false;
    }
    return true;
}

int FiniteQuantale::residual(int b, int a) const {
    int best = -1;
    for (int z = 0; z < size; ++z)
        if (leq(prod[z][a], b)) best = best < 0 ? z : join[best][z];
    // best is the sup of all admissible z; by distributivity it is itself
    // admissible, which the caller may re-check.
    return best;
}

FiniteQuantale divisor_quantale(long n) {
    std::vector<long> divs;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    // element i represents the ideal (divs[i]) of Z/n; sup = gcd, product =
    // multiplication followed by gcd with n (ideal product in Z/n).
    FiniteQuantale q;
    q.size = static_cast<int>(divs.size());
    auto index_of = [&](long d) {
        return static_cast<int>(std::find(divs.begin(), divs.end(), d) - divs.begin());
    };
    q.join.assign(q.size, std::vector<int>(q.size, 0));
    q.prod.assign(q.size, std::vector<int>(q.size, 0));
    for (int i = 0; i < q.size; ++i)
        for (int j = 0; j < q.size; ++j) {
            q.join[i][j] = index_of(gcd(Int(divs[i]), Int(divs[j])).get_si());
            q.prod[i][j] = index_of(gcd(Int(Int(divs[i]) * Int(divs[j])), Int(n)).get_si());
        }
    q.unit = index_of(1);
    q.bottom = index_of(n);  // the zero ideal of Z/n is (n) = (0)
    return q;
}

// ---------------------------------------------------------------------------

bool is_dyadic(const Rat& q) {
    Int den = q.get_den();
    while (den % 2 == 0) den /= 2;
    return den == 1;
}

Rat dyadic_residual(const Rat& b, const Rat& a) {
    if (a == 0) return Rat(1);
    Rat q = b / a;
    return q > 1 ? Rat(1) : q;
}

Rat HalfSequence::at(long n) const {
    if (n >= n0 && n <= n1) return vals[static_cast<size_t>(n - n0)];
    if (n < n0) {
        if (head == Head::Constant) return vals.front();
        Rat r = vals.front();
        for (long k = n; k < n0; ++k) r /= 2;
        return r;
    }
    if (tail == Tail::Constant) return vals.back();
    Rat r = vals.back();
    for (long k = n1; k < n; ++k) r /= 2;
    return r;
}

bool HalfSequence::valid() const {
    if (vals.empty() || n1 - n0 + 1 != static_cast<long>(vals.size())) return false;
    for (const Rat& q : vals)
        if (q < 0 || q > 1 || !is_dyadic(q)) return false;
    for (long n = n0 - 2; n <= n1 + 2; ++n)
        if (at(n) > 2 * at(n + 1)) return false;
    return true;
}

ExtValue ext_mul(const ExtValue& a, const ExtValue& b) {
    // oo * 0 = 0 (sup over the empty approximation)
    if ((a.infinite && !b.infinite && b.v == 0) || (b.infinite && !a.infinite && a.v == 0))
        return {false, Rat(0)};
    if (a.infinite || b.infinite) return {true, Rat(0)};
    return {false, a.v * b.v};
}

ExtValue ext_max(const ExtValue& a, const ExtValue& b) {
    if (a.infinite || b.infinite) return {true, Rat(0)};
    return {false, std::max(a.v, b.v)};
}

ExtValue half_value(const HalfSequence& m) {
    if (m.tail == HalfSequence::Tail::Constant && m.vals.back() > 0) return {true, Rat(0)};
    Rat best(0);
    for (long n = m.n0; n <= m.n1; ++n) {
        Rat scale(1);
        if (n >= 0)
            for (long k = 0; k < n; ++k) scale *= 2;
        else
            for (long k = 0; k < -n; ++k) scale /= 2;
        best = std::max(best, Rat(scale * m.at(n)));
    }
    return {false, best};
}

HalfSequence fixed_sequence(const ExtValue& v) {
    HalfSequence m;
    if (v.infinite) {  // the top sequence, constant 1
        m.n0 = m.n1 = 0;
        m.vals = {Rat(1)};
        m.head = HalfSequence::Head::Constant;
        m.tail = HalfSequence::Tail::Constant;
        return m;
    }
    if (v.v == 0) {
        m.n0 = m.n1 = 0;
        m.vals = {Rat(0)};
        m.head = HalfSequence::Head::Constant;
        m.tail = HalfSequence::Tail::Halving;
        return m;
    }
    // window [floor(log2 v), floor(log2 v) + 1]: value 1 then v/2^{n} < 1
    long e = 0;
    Rat w = v.v;
    while (w >= 2) { w /= 2; ++e; }
    while (w < 1) { w *= 2; --e; }
    // now v = w * 2^e with 1 <= w < 2; t_e = 1, t_{e+1} = w/2
    m.n0 = e;
    m.n1 = e + 1;
    m.vals = {Rat(1), w / 2};
    m.head = HalfSequence::Head::Constant;
    m.tail = HalfSequence::Tail::Halving;
    return m;
}

namespace {

Rat clamp1(const Rat& q) { return q > 1 ? Rat(1) : q; }

// Build a sequence from a pointwise formula with a window guess, fixing the
// head/tail kinds by checking the law just outside the window and widening
// when needed.
HalfSequence build_from_formula(long lo, long hi, const std::function<Rat(long)>& f) {
    for (int attempt = 0; attempt < 24; ++attempt) {
        HalfSequence m;
        m.n0 = lo;
        m.n1 = hi;
        m.vals.clear();
        for (long n = lo; n <= hi; ++n) m.vals.push_back(f(n));
        Rat left = f(lo - 1);
        if (left == m.vals.front())
            m.head = HalfSequence::Head::Constant;
        else if (left == m.vals.front() / 2)
            m.head = HalfSequence::Head::Geometric;
        else {
            --lo;
            continue;
        }
        Rat right = f(hi + 1);
        if (right == m.vals.back())
            m.tail = HalfSequence::Tail::Constant;
        else if (right == m.vals.back() / 2)
            m.tail = HalfSequence::Tail::Halving;
        else {
            ++hi;
            continue;
        }
        bool ok = true;
        for (long n = lo - 3; n <= lo - 2 && ok; ++n)
            if (m.at(n) != f(n)) ok = false;
        for (long n = hi + 2; n <= hi + 3 && ok; ++n)
            if (m.at(n) != f(n)) ok = false;
        if (ok) return m;
        --lo;
        ++hi;
    }
    throw std::domain_error("half-sequence window did not stabilize");
}

}  // namespace

HalfSequence reflect_once(const HalfSequence& m) {
    return build_from_formula(m.n0 - 2, m.n1 + 2,
                              [&m](long n) { return clamp1(2 * m.at(n + 1)); });
}

bool is_reflection_fixed(const HalfSequence& m) {
    for (long n = m.n0 - 3; n <= m.n1 + 3; ++n)
        if (m.at(n) != clamp1(2 * m.at(n + 1))) return false;
    return true;
}

HalfSequence half_sup(const HalfSequence& a, const HalfSequence& b) {
    long lo = std::min(a.n0, b.n0) - 1, hi = std::max(a.n1, b.n1) + 1;
    return build_from_formula(lo, hi,
                              [&](long n) { return std::max(a.at(n), b.at(n)); });
}

HalfSequence half_product(const HalfSequence& a, const HalfSequence& b) {
    // (a b)_n = sup_{p+q=n} a_p b_q; the sup is attained with p in the
    // law-extended window of a or q in that of b.
    auto conv = [&](long n) {
        Rat best(0);
        for (long p = a.n0 - 2; p <= a.n1 + 2; ++p) best = std::max(best, Rat(a.at(p) * b.at(n - p)));
        for (long q = b.n0 - 2; q <= b.n1 + 2; ++q) best = std::max(best, Rat(a.at(n - q) * b.at(q)));
        return best;
    };
    long lo = a.n0 + b.n0 - 2, hi = a.n1 + b.n1 + 2;
    return build_from_formula(lo, hi, conv);
}

LocalizeResult localize_half(const HalfSequence& m) {
    if (!m.valid()) throw std::invalid_argument("half-sequence invariant violated");
    LocalizeResult out;
    out.value = half_value(m);
    out.fixed = fixed_sequence(out.value);
    out.fixed_point_verified = is_reflection_fixed(out.fixed);
    return out;
}

HalfIsoReport localize_iso_check(const std::vector<std::pair<ExtValue, ExtValue>>& samples) {
    HalfIsoReport rep;
    rep.unit_matches = half_value(fixed_sequence({false, Rat(1)})) == ExtValue{false, Rat(1)};
    for (auto& [v, w] : samples) {
        HalfSequence mv = fixed_sequence(v), mw = fixed_sequence(w);
        ExtValue prod = half_value(half_product(mv, mw));
        if (!(prod == ext_mul(v, w))) rep.product_matches = false;
        ExtValue sup = half_value(half_sup(mv, mw));
        if (!(sup == ext_max(v, w))) rep.sup_matches = false;
    }
    return rep;
}

}  // namespace catalg
