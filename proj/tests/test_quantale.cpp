#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/quantale.hpp>

using namespace catalg;

TEST_CASE("ideal residuals") {
    CHECK(ideal_residual({6}, {4}).gen == 3);   // 6/gcd(4,6)
    CHECK(ideal_residual({5}, {1}).gen == 5);   // [b : 1] = b
    CHECK(ideal_residual({6}, {0}).gen == 1);
    CHECK(ideal_residual({0}, {4}).gen == 0);
    // residual adjunction z a <= b iff z <= [b : a] on random triples
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        Int a = rng.range(0, 30), b = rng.range(0, 30), z = rng.range(0, 30);
        IdealZ res = ideal_residual({b}, {a});
        bool lhs = ideal_leq(ideal_product({z}, {a}), {b});
        bool rhs = ideal_leq({z}, res);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ideal sum and product") {
    CHECK(ideal_sum({4}, {6}).gen == 2);
    CHECK(ideal_product({4}, {6}).gen == 24);
    CHECK(ideal_sum({7}, {0}).gen == 7);   // I + 0 = I
    CHECK(ideal_product({7}, {1}).gen == 7);  // I * (1) = I
}

TEST_CASE("prime ideals of ZZ") {
    CHECK(ideal_is_prime_factorization({5}));
    CHECK_FALSE(ideal_is_prime_factorization({6}));
    CHECK(ideal_is_prime_factorization({0}));
    CHECK_FALSE(ideal_is_prime_factorization({1}));
    CHECK(ideal_is_prime_bruteforce({5}, 10));
    CHECK_FALSE(ideal_is_prime_bruteforce({6}, 10));  // (2)(3) inside (6)
    CHECK(ideal_is_prime_bruteforce({0}, 10));
    CHECK_FALSE(ideal_is_prime_bruteforce({1}, 10));
    // agreement with witnesses bounded by n, for all n <= 100
    for (long n = 0; n <= 100; ++n)
        CHECK(ideal_is_prime_factorization({n}) ==
              ideal_is_prime_bruteforce({n}, std::max(2L, n)));
}

TEST_CASE("zariski topology on the truncated spectrum") {
    auto v6 = vanishing_set({6}, 30);
    REQUIRE(v6.size() == 2);
    CHECK(v6[0].gen == 2);
    CHECK(v6[1].gen == 3);
    CHECK(vanishing_set({1}, 30).empty());
    CHECK(vanishing_set({0}, 30).size() == spectrum_z(30).size());

    std::vector<IdealZ> sample = {{0}, {1}, {4}, {6}, {9}, {10}, {36}};
    ZariskiReport rep = zariski_laws_check(sample, 30);
    CHECK(rep.unit_zero_laws);
    CHECK(rep.product_law);
    CHECK(rep.sum_law);
}

TEST_CASE("finite quantale axioms and residuals") {
    FiniteQuantale q = divisor_quantale(12);
    CHECK(q.axioms_hold());
    // adjunction z a <= b iff z <= [b : a], certified by scan
    for (int a = 0; a < q.size; ++a)
        for (int b = 0; b < q.size; ++b) {
            int r = q.residual(b, a);
            REQUIRE(r >= 0);
            CHECK(q.leq(q.prod[r][a], b));
            for (int z = 0; z < q.size; ++z)
                CHECK(q.leq(q.prod[z][a], b) == q.leq(z, r));
        }
}

TEST_CASE("dyadic residual") {
    CHECK(dyadic_residual(rat(1, 4), rat(1, 2)) == rat(1, 2));
    CHECK(dyadic_residual(rat(1, 2), rat(1, 4)) == 1);  // clamped at the top
    CHECK(dyadic_residual(rat(3, 8), Rat(0)) == 1);
}

TEST_CASE("half sequences: validity and laws") {
    // t_n = min(2^{-n}, 1): window [0,1], constant head, halving tail
    HalfSequence m;
    m.n0 = 0;
    m.n1 = 1;
    m.vals = {Rat(1), rat(1, 2)};
    m.head = HalfSequence::Head::Constant;
    m.tail = HalfSequence::Tail::Halving;
    CHECK(m.valid());
    CHECK(m.at(-3) == 1);
    CHECK(m.at(3) == rat(1, 8));
    LocalizeResult lr = localize_half(m);
    CHECK_FALSE(lr.value.infinite);
    CHECK(lr.value.v == 1);
    CHECK(lr.fixed_point_verified);
    CHECK(is_reflection_fixed(m));  // already fixed

    // constant sequence 1: value infinity, reflection = top
    HalfSequence top;
    top.n0 = top.n1 = 0;
    top.vals = {Rat(1)};
    top.head = HalfSequence::Head::Constant;
    top.tail = HalfSequence::Tail::Constant;
    CHECK(top.valid());
    LocalizeResult lt = localize_half(top);
    CHECK(lt.value.infinite);
    CHECK(lt.fixed.at(5) == 1);

    // t_n = 1 for n >= 3 with the geometric head below: value infinity
    HalfSequence geo;
    geo.n0 = geo.n1 = 3;
    geo.vals = {Rat(1)};
    geo.head = HalfSequence::Head::Geometric;
    geo.tail = HalfSequence::Tail::Constant;
    CHECK(geo.valid());
    CHECK(geo.at(2) == rat(1, 2));
    CHECK(localize_half(geo).value.infinite);

    // invariant violation t_n > 2 t_{n+1} rejected
    HalfSequence bad;
    bad.n0 = 0;
    bad.n1 = 1;
    bad.vals = {Rat(1), rat(1, 4)};
    bad.head = HalfSequence::Head::Constant;
    bad.tail = HalfSequence::Tail::Halving;
    CHECK_FALSE(bad.valid());
    CHECK_THROWS(localize_half(bad));
}

TEST_CASE("R_p formula on half sequences") {
    // R_p(M)_n = min(2^p t_{n+p}, 1): iterate reflect_once
    HalfSequence m;
    m.n0 = 0;
    m.n1 = 2;
    m.vals = {rat(1, 8), rat(1, 8), rat(1, 8)};
    m.head = HalfSequence::Head::Constant;
    m.tail = HalfSequence::Tail::Halving;
    REQUIRE(m.valid());
    HalfSequence r1 = reflect_once(m);
    for (long n = -4; n <= 6; ++n) {
        Rat expect = 2 * m.at(n + 1);
        if (expect > 1) expect = 1;
        CHECK(r1.at(n) == expect);
    }
    HalfSequence r2 = reflect_once(r1);
    for (long n = -4; n <= 6; ++n) {
        Rat expect = 4 * m.at(n + 2);
        if (expect > 1) expect = 1;
        CHECK(r2.at(n) == expect);
    }
}

TEST_CASE("fixed sequences satisfy t_n = min(2^{-n} v, 1)") {
    for (auto v : {rat(1, 1), rat(3, 4), rat(2, 1), rat(5, 8), rat(16, 1)}) {
        HalfSequence f = fixed_sequence({false, v});
        CHECK(f.valid());
        CHECK(is_reflection_fixed(f));
        for (long n = -6; n <= 8; ++n) {
            Rat expect = v;
            for (long k = 0; k < n; ++k) expect /= 2;
            for (long k = 0; k > n; --k) expect *= 2;
            if (expect > 1) expect = 1;
            CHECK(f.at(n) == expect);
        }
        CHECK(half_value(f) == ExtValue{false, v});
    }
}

TEST_CASE("idempotence of the reflector on fixed points") {
    for (auto v : {rat(1, 2), rat(7, 4), rat(3, 1)}) {
        HalfSequence f = fixed_sequence({false, v});
        LocalizeResult again = localize_half(f);
        CHECK(again.value == ExtValue{false, v});
        CHECK(is_reflection_fixed(again.fixed));
    }
}

TEST_CASE("localization isomorphism onto [0, oo]") {
    std::vector<std::pair<ExtValue, ExtValue>> samples = {
        {{false, Rat(1)}, {false, Rat(1)}},
        {{false, rat(3, 4)}, {false, Rat(2)}},
        {{true, Rat(0)}, {false, rat(1, 2)}},
        {{true, Rat(0)}, {false, Rat(0)}},  // oo * 0 = 0
        {{false, rat(5, 8)}, {false, rat(8, 5 * 8) * 8}},
    };
    HalfIsoReport rep = localize_iso_check(samples);
    CHECK(rep.product_matches);
    CHECK(rep.sup_matches);
    CHECK(rep.unit_matches);
    // the specific example v = 3/4, w = 2 -> product 3/2
    HalfSequence p = half_product(fixed_sequence({false, rat(3, 4)}),
                                  fixed_sequence({false, Rat(2)}));
    CHECK(half_value(p) == ExtValue{false, rat(3, 2)});
}

TEST_CASE("value map is monotone") {
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        // two comparable windows: m <= M pointwise
        HalfSequence small = fixed_sequence({false, rat(rng.range(1, 8), 8)});
        HalfSequence big = half_sup(small, fixed_sequence({false, rat(rng.range(1, 16), 8)}));
        ExtValue vs = half_value(small), vb = half_value(big);
        CHECK_FALSE(vb.infinite);
        CHECK(vs.v <= vb.v);
    }
}
