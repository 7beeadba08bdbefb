#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/freesym.hpp>
#include <catalg/sympow.hpp>

#include <numeric>

using namespace catalg;

TEST_CASE("finite category validation") {
    CHECK(FinCat::one_object().validate());
    CHECK(FinCat::two_objects_one_arrow().validate());
    FinCat bad = FinCat::one_object();
    bad.comp[0][0] = -1;  // break the identity law
    CHECK_FALSE(bad.validate());
}

TEST_CASE("smc composition on a one-object category") {
    FinCat c = FinCat::one_object();
    // two transpositions on X (x) X (x) X with identity components
    SmcMorphism s0 = smc_identity(c, {0, 0, 0});
    s0.perm = {1, 0, 2};
    SmcMorphism s1 = smc_identity(c, {0, 0, 0});
    s1.perm = {0, 2, 1};
    CHECK(smc_valid(c, s0));
    CHECK(smc_valid(c, s1));
    SmcMorphism prod = smc_compose(c, s1, s0);
    CHECK(prod.perm == perm_compose(s1.perm, s0.perm));
    // associativity and unit on samples
    SmcMorphism id = smc_identity(c, {0, 0, 0});
    CHECK(smc_equal(smc_compose(c, prod, id), prod));
    CHECK(smc_equal(smc_compose(c, id, prod), prod));
    CHECK(smc_equal(smc_compose(c, smc_compose(c, s1, s0), s1),
                    smc_compose(c, s1, smc_compose(c, s0, s1))));
}

TEST_CASE("inverses compose to the identity") {
    FinCat c = FinCat::one_object();
    SmcMorphism f = smc_identity(c, {0, 0, 0});
    f.perm = {2, 0, 1};
    SmcMorphism finv = smc_identity(c, {0, 0, 0});
    finv.perm = {1, 2, 0};
    CHECK(smc_equal(smc_compose(c, finv, f), smc_identity(c, {0, 0, 0})));
}

TEST_CASE("tensor of identities is the identity") {
    FinCat c = FinCat::two_objects_one_arrow();
    SmcMorphism a = smc_identity(c, {0, 1});
    SmcMorphism b = smc_identity(c, {1});
    CHECK(smc_equal(smc_tensor(c, a, b), smc_identity(c, {0, 1, 1})));
}

TEST_CASE("interchange law on samples") {
    FinCat c = FinCat::one_object();
    auto perm_mor = [&](std::vector<int> p) {
        SmcMorphism m = smc_identity(c, std::vector<int>(p.size(), 0));
        m.perm = std::move(p);
        return m;
    };
    SmcMorphism f1 = perm_mor({1, 0}), f2 = perm_mor({1, 0});
    SmcMorphism g1 = perm_mor({0, 1}), g2 = perm_mor({1, 0});
    // (g1 o f1) (x) (g2 o f2) = (g1 (x) g2) o (f1 (x) f2)
    SmcMorphism lhs = smc_tensor(c, smc_compose(c, g1, f1), smc_compose(c, g2, f2));
    SmcMorphism rhs = smc_compose(c, smc_tensor(c, g1, g2), smc_tensor(c, f1, f2));
    CHECK(smc_equal(lhs, rhs));
}

TEST_CASE("permutation groupoid") {
    CHECK(perm_groupoid_hom(3, 3).size() == 6);
    CHECK(perm_groupoid_hom(2, 3).empty());
    CHECK(perm_groupoid_hom(0, 0).size() == 1);
    // composition agrees with group multiplication
    auto s3 = perm_groupoid_hom(3, 3);
    for (auto& a : s3)
        for (auto& b : s3) {
            auto ab = perm_compose(a, b);
            CHECK(std::find(s3.begin(), s3.end(), ab) != s3.end());
        }
}

TEST_CASE("matrix functor validation and extension") {
    FinCat c = FinCat::two_objects_one_arrow();
    MatrixFunctor f;
    f.dims = {2, 1};
    MatC arrow(1, 2, Coef(0, 0));
    arrow(0, 0) = Coef(1, 0);
    arrow(0, 1) = Coef(2, 0);
    f.images = {mat_identity<Coef>(2, Coef(0, 0), Coef(1, 0)),
                mat_identity<Coef>(1, Coef(0, 0), Coef(1, 0)), arrow};
    CHECK(functor_valid(c, f));

    // a bare transposition extends to the swap matrix
    SmcMorphism swap = smc_identity(c, {0, 0});
    swap.perm = {1, 0};
    MatC m = extend_functor(c, f, swap);
    MatC expected = perm_action({1, 0}, 2);
    CHECK(m == expected);

    // identities extend to identities
    SmcMorphism id = smc_identity(c, {0, 1, 0});
    CHECK(extend_functor(c, f, id) ==
          mat_identity<Coef>(4, Coef(0, 0), Coef(1, 0)));
}

TEST_CASE("coxeter relations under extension") {
    FinCat c = FinCat::one_object();
    MatrixFunctor f;
    f.dims = {3};
    f.images = {mat_identity<Coef>(3, Coef(0, 0), Coef(1, 0))};
    auto tr = [&](int i, int n) {
        SmcMorphism m = smc_identity(c, std::vector<int>(n, 0));
        std::swap(m.perm[i], m.perm[i + 1]);
        return extend_functor(c, f, m);
    };
    Coef z(0, 0);
    MatC s0 = tr(0, 3), s1 = tr(1, 3);
    size_t dim = 27;
    CHECK(mat_mul(s0, s0, z) == mat_identity<Coef>(dim, z, Coef(1, 0)));
    CHECK(mat_mul(s0, mat_mul(s1, s0, z), z) == mat_mul(s1, mat_mul(s0, s1, z), z));
}

TEST_CASE("extension respects composition on random pairs") {
    FinCat c = FinCat::two_objects_one_arrow();
    MatrixFunctor f;
    f.dims = {2, 2};
    MatC arrow(2, 2, Coef(0, 0));
    arrow(0, 0) = Coef(1, 0);
    arrow(0, 1) = Coef(1, 0);
    arrow(1, 1) = Coef(3, 0);
    f.images = {mat_identity<Coef>(2, Coef(0, 0), Coef(1, 0)),
                mat_identity<Coef>(2, Coef(0, 0), Coef(1, 0)), arrow};
    REQUIRE(functor_valid(c, f));

    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.below(2));
        // random middle tuple, random permutations, random component arrows
        std::vector<int> mid(n), lo(n), hi(n);
        SmcMorphism a, b;
        a.perm.resize(n);
        b.perm.resize(n);
        std::vector<int> p1(n), p2(n);
        std::iota(p1.begin(), p1.end(), 0);
        std::iota(p2.begin(), p2.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            std::swap(p1[i], p1[rng.below(i + 1)]);
            std::swap(p2[i], p2[rng.below(i + 1)]);
        }
        // first morphism: src lo -> dst mid, components chosen to fit
        for (int i = 0; i < n; ++i) mid[i] = static_cast<int>(rng.below(2));
        a.perm = p1;
        a.dst = mid;
        a.src.resize(n);
        a.comps.resize(n);
        for (int i = 0; i < n; ++i) {
            int target = mid[p1[i]];
            if (target == 1 && rng.below(2) == 0) {
                a.comps[i] = 2;  // the only non-identity arrow 0 -> 1
                a.src[i] = 0;
            } else {
                a.comps[i] = c.identity[target];
                a.src[i] = target;
            }
        }
        // second morphism: src mid -> dst hi
        b.perm = p2;
        b.src = mid;
        b.dst.resize(n);
        b.comps.resize(n);
        for (int i = 0; i < n; ++i) {
            if (mid[i] == 0 && rng.below(2) == 0) {
                b.comps[i] = 2;
                b.dst[p2[i]] = 1;
            } else {
                b.comps[i] = c.identity[mid[i]];
                b.dst[p2[i]] = mid[i];
            }
        }
        REQUIRE(smc_valid(c, a));
        REQUIRE(smc_valid(c, b));
        MatC lhs = extend_functor(c, f, smc_compose(c, b, a));
        MatC rhs = mat_mul(extend_functor(c, f, b), extend_functor(c, f, a), Coef(0, 0));
        CHECK(lhs == rhs);
    }
}
