#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/exactring.hpp>
#include <catalg/parse.hpp>

using namespace catalg;

namespace {

std::vector<std::string> xy = {"x", "y"};
std::vector<std::string> xyz = {"x", "y", "z"};

Polynomial qpoly(const std::string& s, const std::vector<std::string>& vars) {
    return parse_polynomial(s, vars, 0);
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
    Polynomial f = qpoly("x^2 - 1", {"x"});
    CHECK(f.term_count() == 2);
    CHECK(f.degree() == 2);
    Polynomial g = qpoly("2x*y + y^3", xy);
    CHECK(g == qpoly("y^3 + 2*x*y", xy));
    CHECK_THROWS_AS(qpoly("w + 1", xy), ParseError);
}

TEST_CASE("degrevlex order") {
    // x^2 > xy > y^2 > x > y > 1 in two variables
    Polynomial f = qpoly("x^2 + x*y + y^2 + x + y + 1", xy);
    auto it = f.terms().begin();
    CHECK(it->first == Monomial{2, 0});
    ++it;
    CHECK(it->first == Monomial{1, 1});
    ++it;
    CHECK(it->first == Monomial{0, 2});
}

TEST_CASE("groebner: single generator already reduced") {
    auto gb = groebner_basis({qpoly("x^2-1", {"x"})});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == qpoly("x^2-1", {"x"}));
}

TEST_CASE("groebner: hand reduction oracle {x-y, y-1} -> {x-1, y-1}") {
    auto gb = groebner_basis({qpoly("x-y", xy), qpoly("y-1", xy)});
    REQUIRE(gb.size() == 2);
    bool has_x = false, has_y = false;
    for (auto& g : gb) {
        if (g == qpoly("x-1", xy)) has_x = true;
        if (g == qpoly("y-1", xy)) has_y = true;
    }
    CHECK(has_x);
    CHECK(has_y);
}

TEST_CASE("groebner: zero ideal") {
    CHECK(groebner_basis({}).empty());
    CHECK(groebner_basis({Polynomial(2, 0)}).empty());
}

TEST_CASE("groebner: symmetric functions cross-check") {
    // Reduced degrevlex basis of (x+y+z, xy+yz+zx, xyz-1)
    auto gb = groebner_basis({qpoly("x+y+z", xyz), qpoly("x*y+y*z+z*x", xyz),
                              qpoly("x*y*z-1", xyz)});
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == qpoly("x+y+z", xyz));
    CHECK(gb[1] == qpoly("y^2+y*z+z^2", xyz));
    CHECK(gb[2] == qpoly("z^3-1", xyz));
}

TEST_CASE("groebner: circle and hyperbola") {
    auto gb = groebner_basis({qpoly("x^2+y^2-1", xy), qpoly("x*y-1", xy)});
    REQUIRE(gb.size() == 3);
    // every generator reduces to zero
    CHECK(normal_form(qpoly("x^2+y^2-1", xy), gb).is_zero());
    CHECK(normal_form(qpoly("x*y-1", xy), gb).is_zero());
    CHECK_FALSE(normal_form(qpoly("x+y", xy), gb).is_zero());
}

TEST_CASE("normal form in quotient rings") {
    Ring r = parse_ring("QQ[x]/(x^2-1)");
    RElem x2 = RElem::from_poly(r, qpoly("x^2", {"x"}));
    CHECK(x2 == RElem::one(r));

    CHECK(RElem::zero(r).is_zero());

    Ring r2 = parse_ring("QQ[x,y]/(y)");
    RElem xy_elem = RElem::from_poly(r2, qpoly("x*y", xy));
    CHECK(xy_elem.is_zero());
}

TEST_CASE("normal form is idempotent and multiplicative") {
    Ring r = parse_ring("QQ[x,y]/(x^2-y, y^2-2)");
    for (const char* s : {"x^3+y^2", "x*y - 3", "x^5*y^2 - x*y + 7", "x+y"}) {
        Polynomial p = qpoly(s, xy);
        Polynomial nf = normal_form(p, r->groebner());
        CHECK(normal_form(nf, r->groebner()) == nf);
    }
    // normal_form(p*q) = normal_form(normal_form(p) * normal_form(q))
    Polynomial p = qpoly("x^3 + y", xy), q = qpoly("x*y - 1", xy);
    Polynomial lhs = normal_form(p * q, r->groebner());
    Polynomial rhs = normal_form(normal_form(p, r->groebner()) * normal_form(q, r->groebner()),
                                 r->groebner());
    CHECK(lhs == rhs);
}

TEST_CASE("monomial basis of finite-dimensional quotients") {
    Ring r = parse_ring("QQ[x,y]/(x^2, y^3)");
    CHECK(r->finite_dimensional());
    CHECK(r->monomial_basis().size() == 6);

    Ring poly = parse_ring("QQ[x,y]");
    CHECK_FALSE(poly->finite_dimensional());

    Ring zero_ring = parse_ring("QQ[x]/(1)");
    CHECK(zero_ring->finite_dimensional());
    CHECK(zero_ring->monomial_basis().empty());
}

TEST_CASE("jacobian") {
    auto j1 = jacobian({qpoly("x^2-1", {"x"})}, 1, 0);
    CHECK(j1(0, 0) == qpoly("2x", {"x"}));

    auto j2 = jacobian({qpoly("x*y", xy)}, 2, 0);
    CHECK(j2(0, 0) == qpoly("y", xy));
    CHECK(j2(0, 1) == qpoly("x", xy));

    auto j3 = jacobian({qpoly("x^2+y^3", xy)}, 2, 0);
    CHECK(j3(0, 0) == qpoly("2x", xy));
    CHECK(j3(0, 1) == qpoly("3y^2", xy));
}

TEST_CASE("jacobian Leibniz rule") {
    Polynomial f = qpoly("x^2*y - y", xy), g = qpoly("x + y^2", xy);
    auto jf = jacobian({f}, 2, 0);
    auto jg = jacobian({g}, 2, 0);
    auto jfg = jacobian({f * g}, 2, 0);
    for (size_t v = 0; v < 2; ++v) CHECK(jfg(0, v) == f * jg(0, v) + g * jf(0, v));
}

TEST_CASE("ring literals") {
    CHECK(parse_ring("ZZ")->kind() == RingKind::Integers);
    CHECK(parse_ring("QQ")->kind() == RingKind::Rationals);
    Ring z6 = parse_ring("ZZ/6");
    CHECK(z6->kind() == RingKind::IntegersMod);
    CHECK(z6->modulus() == 6);
    Ring q = parse_ring("QQ[x,y]/(x^2-1, x*y)");
    CHECK(q->kind() == RingKind::PolyQuotient);
    CHECK(q->vars().size() == 2);
    Ring f5 = parse_ring("ZZ/5[t]/(t^2+1)");
    CHECK(f5->char_p() == 5);
    CHECK_THROWS_AS(parse_ring("ZZ/4[t]/(t)"), ParseError);
    CHECK_THROWS_AS(parse_ring("QM"), ParseError);
}

TEST_CASE("finite-field quotients") {
    // t^2+1 is irreducible mod 3, so this is GF(9) and every nonzero
    // element is a unit.
    Ring r = parse_ring("ZZ/3[t]/(t^2+1)");
    RElem t = RElem::variable(r, 0);
    CHECK(t * t == -RElem::one(r));
    RElem e = t + RElem::from_int(r, 2);
    auto inv = e.inverse();
    REQUIRE(inv.has_value());
    CHECK(e * *inv == RElem::one(r));

    // mod 5 the same polynomial splits: t+2 becomes a zero divisor.
    Ring r5 = parse_ring("ZZ/5[t]/(t^2+1)");
    RElem t5 = RElem::variable(r5, 0);
    RElem z = t5 + RElem::from_int(r5, 2);
    CHECK_FALSE(z.is_unit());
    CHECK((z * (t5 + RElem::from_int(r5, 3))).is_zero());
}

TEST_CASE("modular arithmetic") {
    Ring z6 = parse_ring("ZZ/6");
    RElem a = RElem::from_int(z6, 4), b = RElem::from_int(z6, 5);
    CHECK(a * b == RElem::from_int(z6, 2));
    CHECK_FALSE(RElem::from_int(z6, 2).is_unit());
    CHECK(RElem::from_int(z6, 5).is_unit());
}
