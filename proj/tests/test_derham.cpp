#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/derham.hpp>
#include <catalg/parse.hpp>

using namespace catalg;

namespace {

FpAlgebra alg(const std::string& s) { return FpAlgebra::from_ring(parse_ring(s)); }

}  // namespace

TEST_CASE("omega1 of a polynomial ring is free on the variables") {
    FpAlgebra b = alg("QQ[x,y,z]");
    Omega1 o = omega1(b);
    CHECK(o.module.gens() == 3);
    CHECK(o.module.rels().empty());
}

TEST_CASE("omega1 of QQ[x]/(x^2): one-dimensional over QQ") {
    Omega1 o = omega1(alg("QQ[x]/(x^2)"));
    CHECK(o.dim == 1);  // B dx / (2x dx)
    CHECK(o.cokernel_dim_matches);
    CHECK(o.cokernel_iso_certified);
}

TEST_CASE("omega1 of QQ itself vanishes") {
    Omega1 o = omega1(alg("QQ[x]/(x)"));
    CHECK(o.dim == 0);
    CHECK(o.cokernel_dim_matches);
}

TEST_CASE("omega1 two-construction comparison on a corpus") {
    for (const char* s : {"QQ[x]/(x^2)", "QQ[x]/(x^3)", "QQ[x]/(x^2-1)",
                          "QQ[x,y]/(x^2, y^2)", "QQ[x,y]/(x^2, x*y, y^2)",
                          "QQ[x,y]/(x^2-y, y^2)"}) {
        Omega1 o = omega1(alg(s));
        CHECK(o.cokernel_dim_matches);
        CHECK(o.cokernel_iso_certified);
    }
}

TEST_CASE("universal derivation checks") {
    FpAlgebra b = alg("QQ[x]/(x^3)");
    ModulePresentation m_full = ModulePresentation::free_module(b.ring, 1);
    // d(x) = dx style image into M = B: delta(x) = 1
    std::vector<std::vector<RElem>> one_image = {{RElem::one(b.ring)}};
    // 3x^2 != 0 in B, so this is not a derivation into B ...
    CHECK_FALSE(universal_derivation_check(b, m_full, one_image));
    // ... but into B/(x^2) it is.
    ModulePresentation m_small(b.ring, 1);
    m_small.add_relation({RElem::from_poly(
        b.ring, Polynomial::variable(0, 1, 0) * Polynomial::variable(0, 1, 0))});
    CHECK(universal_derivation_check(b, m_small, one_image));
    // delta = 0 is always a derivation.
    std::vector<std::vector<RElem>> zero_image = {{RElem::zero(b.ring)}};
    CHECK(universal_derivation_check(b, m_full, zero_image));
}

TEST_CASE("derivation d(x^2) = 2x dx via the d0 matrix") {
    FpAlgebra b = alg("QQ[x]/(x^4)");
    Omega1 o = omega1(b);
    // column of x^2 equals 2 * column of x acted by x: check via the formal
    // rule d(x^2) = 2x dx directly on coordinates.
    const Ring& r = b.ring;
    int col_x2 = r->basis_index(Monomial{2});
    std::vector<RElem> expect = {RElem::from_poly(
        r, Polynomial::variable(0, 1, 0) * Polynomial::constant(Coef(2, 0), 1))};
    // coords of 2x dx in the omega basis
    std::vector<Coef> amb;
    for (auto& e : expect) {
        auto c = basis_coords(e);
        amb.insert(amb.end(), c.begin(), c.end());
    }
    auto coords = o.omega_basis.coords(amb);
    for (size_t i = 0; i < o.dim; ++i) CHECK(o.d0(i, col_x2) == coords[i]);
}

TEST_CASE("de Rham complex of QQ[x]/(x^2)") {
    DeRhamComplex cc = derham_complex(alg("QQ[x]/(x^2)"), 2);
    REQUIRE(cc.dims.size() == 3);
    CHECK(cc.dims[0] == 2);
    CHECK(cc.dims[1] == 1);
    CHECK(cc.dims[2] == 0);
    CHECK(cc.d_squared_zero);
    CHECK(cc.graded_leibniz);
    auto h = cc.cohomology();
    CHECK(h[0] == 1);
    CHECK(h[1] == 0);
}

TEST_CASE("de Rham d1 o d0 = 0 and the sign rule on QQ[x,y]/(x^2,y^2)") {
    DeRhamComplex cc = derham_complex(alg("QQ[x,y]/(x^2, y^2)"), 3);
    CHECK(cc.d_squared_zero);
    CHECK(cc.graded_leibniz);
    // d(x dy) = dx ^ dy and d(y dx) = -dx ^ dy: read off through columns.
    // Basis bookkeeping is internal; the graded Leibniz certificate covers
    // the sign rule, and d^2 = 0 covers the composition.
}

TEST_CASE("de Rham cohomology of artinian algebras") {
    auto h1 = derham_cohomology(alg("QQ[x]/(x^2)"));
    CHECK(h1[0] == 1);
    CHECK(h1[1] == 0);
    auto h2 = derham_cohomology(alg("QQ[x]/(x^3)"));
    CHECK(h2[0] == 1);
    CHECK(h2[1] == 0);
    // H^0 always contains the constants.
    for (const char* s : {"QQ[x]/(x^2-1)", "QQ[x,y]/(x^2, y^3)"}) {
        auto h = derham_cohomology(alg(s));
        CHECK(h[0] >= 1);
    }
}

TEST_CASE("functoriality: sum rule and base change") {
    FpAlgebra b = alg("QQ[x]/(x^2)");
    FpAlgebra c_triv = alg("QQ[u]/(u)");      // C = QQ
    FpAlgebra c_eps = alg("QQ[u]/(u^2)");     // C = QQ[eps]/(eps^2)

    FunctorialityReport r1 = omega1_functoriality_checks(b, b, c_triv);
    CHECK(r1.sum_rule_holds);
    CHECK(r1.lhs_dim == r1.rhs_dim);
    CHECK(r1.base_change_holds);  // base change along QQ is the identity

    FunctorialityReport r2 = omega1_functoriality_checks(b, b, c_eps);
    CHECK(r2.base_change_holds);  // dims double along QQ[eps]/(eps^2)
}

TEST_CASE("euler contraction identities for n = 0..3") {
    for (int n = 0; n <= 3; ++n) {
        EulerContractionReport rep = euler_contraction_check(n);
        CHECK(rep.s_iota_id);
        CHECK(rep.p_t_id);
        CHECK(rep.tp_plus_iotas_id);
        CHECK(rep.all());
    }
}

TEST_CASE("characteristic 2 base is rejected") {
    CHECK_THROWS_AS(alg("ZZ/2[x]/(x^2)"), std::domain_error);
}
