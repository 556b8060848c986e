#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladderlab/hyperseries.hpp"
#include "ladderlab/quadrature.hpp"
#include "test_support.hpp"

using namespace ladderlab;

namespace {

QuadResult quad01(const Integrand& f, const PrecisionContext& ctx, int max_levels = 12) {
    return integrate(f, Real::of(0, ctx), Real::of(1, ctx), ctx, max_levels);
}

}  // namespace

TEST_CASE("exact antiderivative anchors") {
    PrecisionContext ctx(40);
    Real tol = pow10(-38, ctx);

    QuadResult a = quad01(
        [](const Real&, const Real& xa, const Real&) { return Complex(log(xa)); }, ctx);
    CHECK(abs(a.value + Complex::of(1, ctx)) < tol);
    CHECK(a.err_estimate < pow10(-40, ctx));

    // w1's log form at h = 0.
    QuadResult b = quad01(
        [](const Real& x, const Real& xa, const Real&) {
            return Complex((x * x * 3 - 1) * log(xa));
        },
        ctx);
    CHECK(abs(b.value - Complex::of(Rational(2, 3), ctx)) < tol);

    QuadResult c = quad01(
        [](const Real& x, const Real&, const Real&) {
            return Complex(1 / (1 + x * x));
        },
        ctx);
    CHECK(abs(c.value - Complex(const_pi(ctx) / 4)) < tol);

    // Algebraic endpoint singularity.
    QuadResult d = quad01(
        [](const Real&, const Real& xa, const Real&) { return Complex(1 / sqrt(xa)); }, ctx);
    CHECK(abs(d.value - Complex::of(2, ctx)) < tol);
}

TEST_CASE("non-integrable integrand raises NonConvergence") {
    PrecisionContext ctx(30);
    CHECK_THROWS_AS(
        quad01([](const Real&, const Real& xa, const Real&) { return Complex(1 / xa); }, ctx),
        NonConvergence);
}

TEST_CASE("double-exponential convergence: levels grow slowly with digits") {
    PrecisionContext d30(30), d60(60);
    auto f = [](const Real& x, const Real&, const Real&) { return Complex(1 / (1 + x * x)); };
    QuadResult lo = quad01(f, d30);
    QuadResult hi = quad01(f, d60);
    CHECK(hi.levels_used <= lo.levels_used + 2);
    CHECK(hi.err_estimate < pow10(-60, d60));
}

TEST_CASE("w-chain equalities at h in {1/2, 1, 2}") {
    PrecisionContext ctx(40);
    Real tol = pow10(-30, ctx);
    for (const Rational& h : {Rational(1, 2), Rational(1), Rational(2)}) {
        Complex ch = Complex::of(h, ctx);
        Complex w1a = named_integral(NamedIntegral::w1_arctan, ch, ctx).value;
        Complex w1l = named_integral(NamedIntegral::w1_log, ch, ctx).value;
        Complex w2a = named_integral(NamedIntegral::w2_arctan, ch, ctx).value;
        Complex w2l = named_integral(NamedIntegral::w2_log, ch, ctx).value;
        Complex s1 = named_series(SeriesId::s1, ch, ctx) * Real::of(Rational(2, 3), ctx);
        CHECK(abs(w1a - w1l) < tol);
        CHECK(abs(w1a - w2a) < tol);
        CHECK(abs(w1a - w2l) < tol);
        CHECK(abs(w1a - s1) < tol);
    }
}

TEST_CASE("w1_arctan limit h -> 0+ is 2/3") {
    PrecisionContext ctx(40);
    Complex h = Complex(Real::parse("1e-6", ctx));
    Complex v = named_integral(NamedIntegral::w1_arctan, h, ctx).value;
    CHECK(abs(v - Complex::of(Rational(2, 3), ctx)) < pow10(-6, ctx));
    CHECK_THROWS_AS(named_integral(NamedIntegral::w1_arctan, Complex::of(0, ctx), ctx),
                    SingularParameter);
}

TEST_CASE("s2_lhs equals the s2 series") {
    PrecisionContext ctx(40);
    Real tol = pow10(-32, ctx);
    for (const Rational& g : {Rational(1, 10), Rational(1, 2)}) {
        Complex cg = Complex::of(g, ctx);
        Complex lhs = named_integral(NamedIntegral::s2_lhs, cg, ctx).value;
        Complex rhs = named_series(SeriesId::s2, cg, ctx);
        CHECK(abs(lhs - rhs) < tol);
    }
}

TEST_CASE("cubic integral pair: w2 = 2 w1") {
    PrecisionContext ctx(40);
    Real tol = pow10(-32, ctx);
    for (const Rational& u : {Rational(1, 2), Rational(3, 10)}) {
        Complex cu = Complex::of(u, ctx);
        Complex w1 = named_integral(NamedIntegral::cubic_w1, cu, ctx).value;
        Complex w2 = named_integral(NamedIntegral::cubic_w2, cu, ctx).value;
        CHECK(abs(w2 - w1 * 2) < tol);
    }
    // Frozen complex value at u = 1/2 (principal log, upper side inside the
    // negative-argument window).
    Complex w1 = named_integral(NamedIntegral::cubic_w1, Complex::of(Rational(1, 2), ctx), ctx)
                     .value;
    CHECK(abs(w1.re() - Real::parse("-2.595173671964869695454043", ctx)) < pow10(-24, ctx));
    CHECK(abs(w1.im() - Real::parse("1.511771534427786958440853", ctx)) < pow10(-24, ctx));
}

TEST_CASE("thm1 integral matches the series form at u = 1+i") {
    PrecisionContext ctx(40);
    Complex u(Real::of(1, ctx), Real::of(1, ctx));
    Complex integral = named_integral(NamedIntegral::thm1_integral, u, ctx).value;
    // 2/(3 (u-1)^2 u^2 (u+1)^2) * bracket sum = s3(u) / (u (u^2-1)).
    Complex series_form = named_series(SeriesId::s3, u, ctx) / (u * (sqr(u) - 1));
    CHECK(abs(integral - series_form) < pow10(-30, ctx));
}

TEST_CASE("thm1 integral rejects denominator roots inside [0, 1]") {
    PrecisionContext ctx(40);
    // Real u = 1/2 puts the u^2 - x^2 factor's root x = 1/2 in range.
    CHECK_THROWS_AS(
        named_integral(NamedIntegral::thm1_integral, Complex::of(Rational(1, 2), ctx), ctx),
        SingularParameter);
}

TEST_CASE("sextic closed forms across parameter sets") {
    PrecisionContext ctx(40);
    Real tol = pow10(-30, ctx);
    Real half = Real::of(Rational(1, 2), ctx);
    Real quarter = Real::of(Rational(1, 4), ctx);
    Complex one = Complex::of(1, ctx);

    struct Row {
        Rational a, b, c, d;
        Real y;
        SexticKernel kernel;
    };
    std::vector<Row> rows = {
        {Rational(2), Rational(1), Rational(1), Rational(1), half, SexticKernel::arctan_type},
        {Rational(2), Rational(1), Rational(1), Rational(-1, 2), quarter,
         SexticKernel::arctan_type},
        {Rational(2), Rational(3), Rational(2), Rational(1), half, SexticKernel::arctan_type},
        {Rational(1), Rational(1), Rational(2), Rational(1, 2), quarter,
         SexticKernel::arcsin_type},
        {Rational(2), Rational(1), Rational(1), Rational(1), half, SexticKernel::arcsin_type},
    };
    for (const Row& row : rows) {
        SexticSpec spec{row.a, row.b, row.c, row.d, one, row.y, row.kernel};
        CHECK(sextic_closed_form_check(spec, ctx) < tol);
    }

    // h = 0: empty integral, both sides vanish.
    SexticSpec zero_spec{Rational(2), Rational(1), Rational(1), Rational(1),
                         Complex::of(0, ctx), half, SexticKernel::arcsin_type};
    CHECK(sextic_closed_form_check(zero_spec, ctx) < pow10(-38, ctx));

    // Complex upper limit exercises the segment parametrization.
    SexticSpec cplx{Rational(2), Rational(1), Rational(1), Rational(1),
                    Complex(half, quarter), half, SexticKernel::arctan_type};
    CHECK(sextic_closed_form_check(cplx, ctx) < tol);

    CHECK_THROWS_AS(sextic_closed_form_check(
                        SexticSpec{Rational(2), Rational(1), Rational(1), Rational(1), one,
                                   Real::of(2, ctx), SexticKernel::arctan_type},
                        ctx),
                    DomainError);
}

TEST_CASE("sextic derivative oracle at spot points") {
    // d/dh of the closed form must equal the integrand at g = h; checked by
    // central differences, independent of the quadrature path.
    PrecisionContext ctx(40);
    Rational a(2), b(1), c(1), d(1);
    Real y = Real::of(Rational(1, 2), ctx);
    Real omy = 1 - y;
    Real kernel = pow_rat(omy, a) * pow_rat(y, b);
    Real front = pow_rat(omy, c - a / 2) * pow_rat(y, d - b / 2);
    Real coef = pow_rat(omy, c) * pow_rat(y, d);
    auto closed = [&](const Real& h) {
        return front * atan(h * sqrt(kernel));
    };
    Real step = pow10(-13, ctx);
    for (const Rational& hq : {Rational(1, 2), Rational(1), Rational(7, 4)}) {
        Real h = Real::of(hq, ctx);
        Real deriv = (closed(h + step) - closed(h - step)) / (step * 2);
        Real integrand = coef / (1 + h * h * kernel);
        CHECK(abs(deriv - integrand) < pow10(-24, ctx));
    }
}
