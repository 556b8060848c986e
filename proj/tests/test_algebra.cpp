#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladderlab/algebra.hpp"
#include "test_support.hpp"

using namespace ladderlab;

TEST_CASE("polynomial arithmetic is exact") {
    RationalPoly p = RationalPoly::parse("-1,-3,0,1");  // y^3 - 3y - 1
    RationalPoly q = RationalPoly::parse("1,-3,0,1");   // y^3 - 3y + 1
    CHECK(p * q == RationalPoly::parse("-1,0,9,0,-6,0,1"));  // y^6 - 6y^4 + 9y^2 - 1

    RationalPoly f1 = RationalPoly::parse("1,-1,-6,-1,1");
    RationalPoly f2 = RationalPoly::parse("1,1,-6,1,1");
    CHECK(f1 * f2 == f2 * f1);
    // (r^4-6r^2+1)^2 - (r^3+r)^2 = r^8 - 13r^6 + 36r^4 - 13r^2 + 1.
    CHECK(f1 * f2 == RationalPoly::parse("1,0,-13,0,36,0,-13,0,1"));

    CHECK((p * RationalPoly::zero()).is_zero());
    CHECK(p + (-p) == RationalPoly::zero());
    CHECK(RationalPoly::parse("1/3,2,-3,1").eval(Rational(0)) == Rational(1, 3));
}

TEST_CASE("parse and render") {
    RationalPoly p = RationalPoly::parse("1/3,2,-3,1");
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0) == Rational(1, 3));
    CHECK(p.csv() == "1/3,2,-3,1");
    CHECK(p.str("u") == "u^3 - 3*u^2 + 2*u + 1/3");
    CHECK_THROWS_AS(RationalPoly::parse("1,,2"), DomainError);
    CHECK_THROWS_AS(RationalPoly::parse("abc"), DomainError);
}

TEST_CASE("compose_numerator reproduces the composition targets") {
    RationalPoly cubic = RationalPoly::parse("1/3,2,-3,1");  // u^3 - 3u^2 + 2u + 1/3

    // u = 2(y-1)/(2y-1) -> scalar multiple of -16y^3 + 12y + 2.
    RationalPoly r1 = compose_numerator(cubic, RationalPoly::parse("-2,2"),
                                        RationalPoly::parse("-1,2"));
    CHECK(r1 == RationalPoly::parse("-2,-12,0,16").primitive());
    CHECK(r1 == RationalPoly::parse("-1,-6,0,8"));  // primitive form of -(-16y^3+12y+2)/2

    // u = y^2/(y^2 - 1) -> scalar multiple of y^6 - 6y^4 + 9y^2 - 1.
    RationalPoly r2 = compose_numerator(cubic, RationalPoly::parse("0,0,1"),
                                        RationalPoly::parse("-1,0,1"));
    CHECK(r2 == RationalPoly::parse("-1,0,9,0,-6,0,1"));

    // u^4 - 5u^2 + 16/3 with u = (1+r^2)/(1-r^2) -> the quartic pair product.
    RationalPoly quartic = RationalPoly::parse("16/3,0,-5,0,1");
    RationalPoly r3 = compose_numerator(quartic, RationalPoly::parse("1,0,1"),
                                        RationalPoly::parse("1,0,-1"));
    RationalPoly target =
        RationalPoly::parse("1,-1,-6,-1,1") * RationalPoly::parse("1,1,-6,1,1");
    CHECK(r3 == target.primitive());

    CHECK_THROWS_AS(
        compose_numerator(cubic, RationalPoly::parse("1"), RationalPoly::zero()), DomainError);
}

TEST_CASE("real root isolation") {
    PrecisionContext ctx(50);

    auto roots = real_roots(RationalPoly::parse("1,6,-9,3"), Rational(-1), Rational(0), ctx);
    REQUIRE(roots.size() == 1);
    Real u0 = roots[0].approx(ctx);
    CHECK(abs(u0 - Real::parse("-0.137158042603257612837668", ctx)) < pow10(-24, ctx));

    RationalPoly sextic = RationalPoly::parse("-1,2,0,-2,0,1,1");
    auto pos = real_roots(sextic, Rational(0), Rational(1), ctx);
    REQUIRE(pos.size() == 1);
    CHECK(abs(pos[0].approx(ctx) - Real::parse("0.70022133875781062543780", ctx)) <
          pow10(-22, ctx));
    auto neg = real_roots(sextic, Rational(-2), Rational(-1), ctx);
    REQUIRE(neg.size() == 1);
    CHECK(abs(neg[0].approx(ctx) - Real::parse("-1.14526320667043943401561", ctx)) <
          pow10(-22, ctx));

    // All three real roots of x^3 + 6x^2 + 3x - 1 correspond to the pi/18
    // trig constants via {a, -b, -1/c}.
    auto all = real_roots(RationalPoly::parse("-1,3,6,1"), Rational(-10), Rational(10), ctx);
    REQUIRE(all.size() == 3);
    Real a = constant("gm_a").approx(ctx);
    Real b = constant("gm_b").approx(ctx);
    Real c = constant("gm_c").approx(ctx);
    Real tol = pow10(-45, ctx);
    CHECK(abs(all[0].approx(ctx) - (-(1 / c))) < tol);
    CHECK(abs(all[1].approx(ctx) - (-b)) < tol);
    CHECK(abs(all[2].approx(ctx) - a) < tol);

    CHECK_THROWS_AS(real_roots(RationalPoly::parse("1,-2,1"), Rational(0), Rational(2), ctx),
                    DomainError);  // (x-1)^2 not squarefree
}

TEST_CASE("constant registry satisfies its minimal polynomials") {
    PrecisionContext d50(50), d100(100);
    for (const std::string& id : constant_ids()) {
        const AlgebraicConstant& c = constant(id);
        Real r50 = abs(c.minpoly.eval(c.approx(d50)));
        Real r100 = abs(c.minpoly.eval(c.approx(d100)));
        CAPTURE(id);
        CHECK(r50 < pow10(-45, d50));
        CHECK(r100 < pow10(-95, d100));
    }
    CHECK_THROWS_AS(constant("no_such_constant"), UnknownId);
}

TEST_CASE("registry anchor approximations") {
    PrecisionContext ctx(50);
    CHECK(abs(constant("mu").approx(ctx) - Real::parse("0.34729635533386069770", ctx)) <
          pow10(-19, ctx));
    CHECK(abs(constant("quartic_r").approx(ctx) -
              Real::parse("0.54823026888114684586", ctx)) < pow10(-19, ctx));
    CHECK(abs(constant("quartic_r2").approx(ctx) -
              Real::parse("0.32854339778294298029", ctx)) < pow10(-19, ctx));
    CHECK(abs(constant("watson_u").approx(ctx) -
              Real::parse("0.44504186791262880858", ctx)) < pow10(-19, ctx));
    // y = 1/(1 - x1).
    Real x1 = constant("bytsko_x1").approx(ctx);
    CHECK(abs(constant("bytsko_y").approx(ctx) - 1 / (1 - x1)) < pow10(-45, ctx));
}

TEST_CASE("radius-method checks") {
    PrecisionContext ctx(50);
    Real tol = pow10(-45, ctx);
    Real sqrt3 = sqrt(Real::of(3, ctx));

    // sqrt(u(4-3u))/(2u^2-3u) = i sqrt(3) at the cubic's root near -0.137.
    Complex u0(constant("ll_u0").approx(ctx));
    Complex lhs = sqrt(u0 * (4 - u0 * 3)) / (sqr(u0) * 2 - u0 * 3);
    CHECK(abs(lhs.re()) < tol);
    CHECK(abs(lhs.im() - sqrt3) < tol);
    // sqrt(u/(u-1)) recovers mu = 2cos(4pi/9).
    CHECK(abs(sqrt(u0 / (u0 - 1)) - Complex(constant("mu").approx(ctx))) < tol);

    // sqrt(4-3u^2)/(u^2-2) = -i sqrt(3) at u1 = sqrt((5 - sqrt(11/3))/2).
    Complex u1(constant("quartic_u1").approx(ctx));
    Complex r1 = sqrt(4 - sqr(u1) * 3) / (sqr(u1) - 2);
    CHECK(abs(r1.re()) < tol);
    CHECK(abs(r1.im() + sqrt3) < tol);

    // r = sqrt((u-1)/(u+1)) maps the two admissible quartic roots onto the
    // two radii.
    Complex rad1 = sqrt((u1 - 1) / (u1 + 1));
    CHECK(abs(rad1 - Complex(constant("quartic_r2").approx(ctx))) < tol);
    Complex u2(constant("quartic_u2").approx(ctx));
    Complex rad2 = sqrt((u2 - 1) / (u2 + 1));
    CHECK(abs(rad2 - Complex(constant("quartic_r").approx(ctx))) < tol);
}

TEST_CASE("reciprocal pairing of the quartic radii") {
    PrecisionContext ctx(50);
    Real tol = pow10(-45, ctx);
    // Both quartic factors are palindromic, so roots pair as r <-> 1/r.
    auto rec1 = real_roots(RationalPoly::parse("1,1,-6,1,1"), Rational(17, 10), Rational(2),
                           ctx);
    REQUIRE(rec1.size() == 1);
    CHECK(abs(rec1[0].approx(ctx) - 1 / constant("quartic_r").approx(ctx)) < tol);
    auto rec2 = real_roots(RationalPoly::parse("1,-1,-6,-1,1"), Rational(3), Rational(7, 2),
                           ctx);
    REQUIRE(rec2.size() == 1);
    CHECK(abs(rec2[0].approx(ctx) - 1 / constant("quartic_r2").approx(ctx)) < tol);
}

TEST_CASE("bytsko closed forms and the Nahm system") {
    PrecisionContext ctx(100);
    Real tol = pow10(-92, ctx);
    RationalPoly sextic = constant("bytsko_x0").minpoly;
    Real s = sin(const_pi(ctx) / 14);
    Real root = sqrt(1 - s * s * 3);
    CHECK(abs(sextic.eval(root - s)) < tol);
    CHECK(abs(sextic.eval(-root - s)) < tol);

    NahmSystem ns = nahm_system(ctx);
    CHECK(ns.alpha > 0);
    CHECK(ns.alpha < 1);
    CHECK(ns.beta > 0);
    CHECK(ns.beta < 1);
    Real a = ns.alpha, b = ns.beta;
    CHECK(abs(1 - a - a * a * a * b) < tol);
    CHECK(abs(1 - a * b * b * b - a * b * b) < tol);
    CHECK(abs(a * b * b * b - constant("bytsko_y").approx(ctx)) < tol);
}

TEST_CASE("bivariate sextic denominator factorization") {
    BivarPoly u = BivarPoly::var_u();
    BivarPoly x = BivarPoly::var_x();
    BivarPoly one = BivarPoly::constant(1);
    BivarPoly u2 = u * u;
    BivarPoly x2 = x * x;

    // u^2 (u^2-1)^2 - x^2 (1-x^2)^2
    BivarPoly lhs = u2 * (u2 - one) * (u2 - one) - x2 * (one - x2) * (one - x2);
    BivarPoly rhs = (u2 + u * x + x2 - one) * (u2 - u * x + x2 - one) * (u2 - x2);
    CHECK(verify_poly_identity(lhs, rhs));

    // Sign flip on the ux term breaks it.
    BivarPoly bad = (u2 + u * x + x2 - one) * (u2 + u * x + x2 - one) * (u2 - x2);
    CHECK_FALSE(verify_poly_identity(lhs, bad));

    // Spot check u = 2, x = 1: both sides are 36 = 6 * 2 * 3.
    Rational lhs_spot = Rational(4) * Rational(9) - Rational(0);
    Rational rhs_spot = Rational(6) * Rational(2) * Rational(3);
    CHECK(lhs_spot == rhs_spot);
}
