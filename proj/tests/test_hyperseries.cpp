#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladderlab/hyperseries.hpp"
#include "ladderlab/identities.hpp"
#include "ladderlab/quadrature.hpp"
#include "test_support.hpp"

using namespace ladderlab;
using ladderlab::testing::Rng;

namespace {
Complex s1_of(const Complex& h, const PrecisionContext& ctx) {
    return named_series(SeriesId::s1, h, ctx);
}
}  // namespace

TEST_CASE("s1 anchors: h = 0 and the h = 1 quadrature oracle") {
    PrecisionContext ctx(40);
    CHECK(abs(s1_of(Complex::of(0, ctx), ctx) - Complex::of(1, ctx)) < pow10(-38, ctx));

    // Frozen from a 60-digit independent evaluation of the series.
    Complex s1_1 = s1_of(Complex::of(1, ctx), ctx);
    CHECK(abs(s1_1.re() -
              Real::parse("0.976171060971172432845269328418989166980860955001", ctx)) <
          pow10(-38, ctx));

    // s1(1) = (3/2) w1(1), w1 evaluated by tanh-sinh quadrature.
    QuadResult w1 = named_integral(NamedIntegral::w1_arctan, Complex::of(1, ctx), ctx);
    CHECK(abs(s1_1 - w1.value * Real::of(Rational(3, 2), ctx)) < pow10(-34, ctx));
}

TEST_CASE("s1(1/2) matches the log-kernel integral") {
    PrecisionContext ctx(40);
    Complex h = Complex::of(Rational(1, 2), ctx);
    QuadResult w2 = named_integral(NamedIntegral::w2_log, h, ctx);
    CHECK(abs(s1_of(h, ctx) - w2.value * Real::of(Rational(3, 2), ctx)) < pow10(-34, ctx));
}

TEST_CASE("s2 leading behavior -4g/15") {
    PrecisionContext ctx(40);
    Complex g = Complex(Real::parse("1e-8", ctx));
    Complex v = named_series(SeriesId::s2, g, ctx);
    Complex lead = g * Real::of(Rational(-4, 15), ctx);
    // Next term is O(g^3).
    CHECK(abs(v - lead) < pow10(-22, ctx));
}

TEST_CASE("s3 equals the Theorem 1 K closed form at u = 1+i") {
    PrecisionContext ctx(50);
    Complex u(Real::of(1, ctx), Real::of(1, ctx));
    Complex s3 = named_series(SeriesId::s3, u, ctx);
    Theorem1Terms t = theorem1_terms(u, ctx);
    CHECK(abs(s3 - t.K) < pow10(-45, ctx));
}

TEST_CASE("cubic series at z = 1 against the quadrature oracle") {
    // The series sums to the /(1-x) cubic integral; the /x integral carries
    // an extra factor 2 (w2 = 2 w1).
    PrecisionContext ctx(40);
    Complex one = Complex::of(1, ctx);
    Complex series = named_series(SeriesId::cubic, one, ctx);
    Integrand f_over_1mx = [](const Real& x, const Real& xa, const Real& xb) {
        Real arg = 1 - (x * (xb * xb));
        (void)xa;
        return Complex(log(arg) / xb);
    };
    Integrand f_over_x = [](const Real& x, const Real& xa, const Real& xb) {
        Real arg = 1 - (x * (xb * xb));
        return Complex(log(arg) / xa);
    };
    QuadResult q1 = integrate(f_over_1mx, Real::of(0, ctx), Real::of(1, ctx), ctx);
    QuadResult qx = integrate(f_over_x, Real::of(0, ctx), Real::of(1, ctx), ctx);
    CHECK(abs(series - q1.value) < pow10(-34, ctx));
    CHECK(abs(series * 2 - qx.value) < pow10(-34, ctx));
    CHECK(abs(series.re() - Real::parse("-0.17573201502854872021", ctx)) < pow10(-19, ctx));
}

TEST_CASE("convergence verdicts") {
    PrecisionContext ctx(30);
    BracketSeries s1b = named_bracket(SeriesId::s1);

    ConvergenceVerdict v1 = converges(s1b, Complex::of(1, ctx));
    CHECK(v1.converges);
    CHECK(abs(v1.ratio_limit - Real::of(Rational(4, 27), ctx)) < pow10(-25, ctx));

    // Radius |h| < 3 sqrt(3)/2 ~ 2.598: 2.7 is out (ratio 1.08), 2.59 is in.
    ConvergenceVerdict v2 = converges(s1b, Complex(Real::parse("2.7", ctx)));
    CHECK_FALSE(v2.converges);
    CHECK(abs(v2.ratio_limit - Real::parse("1.08", ctx)) < pow10(-24, ctx));
    CHECK(converges(s1b, Complex(Real::parse("2.59", ctx))).converges);

    // s3 at u = 1+i: bracket argument u(u^2-1) has modulus sqrt(10).
    BracketSeries s3b = named_bracket(SeriesId::s3);
    Complex w = named_bracket_arg(SeriesId::s3, Complex(Real::of(1, ctx), Real::of(1, ctx)));
    ConvergenceVerdict v3 = converges(s3b, w);
    CHECK(v3.converges);
    CHECK(abs(v3.ratio_limit - Real::of(Rational(4, 270), ctx)) < pow10(-25, ctx));

    CHECK_THROWS_AS(eval_bracket(s1b, Complex(Real::parse("2.7", ctx)), ctx), DivergentSeries);
    CHECK_THROWS_AS(named_series(SeriesId::s3, Complex(Real::parse("0.9", ctx)), ctx),
                    DivergentSeries);
}

TEST_CASE("denominator parameter validation") {
    PrecisionContext ctx(30);
    BracketSeries bad{{Rational(1, 2)}, {Rational(-1)}, Rational(1, 4), 1};
    CHECK_THROWS_AS(eval_bracket(bad, Complex::of(Rational(1, 2), ctx), ctx), DomainError);
}

TEST_CASE("slow-convergence flag near the radius") {
    PrecisionContext tiny(10, 0);
    BracketSeries geo{{Rational(1)}, {Rational(1)}, Rational(9995, 10000), 0};
    SeriesEvalInfo info;
    Complex v = eval_bracket(geo, Complex::of(1, tiny), tiny, &info);
    CHECK(info.slow);
    // Pure geometric series: sums to 1/(1 - q).
    CHECK(abs(v - Complex(1 / (1 - Real::of(Rational(9995, 10000), tiny)))) <
          pow10(-7, tiny));

    SeriesEvalInfo fast_info;
    eval_bracket(named_bracket(SeriesId::s1), Complex::of(1, tiny), tiny, &fast_info);
    CHECK_FALSE(fast_info.slow);
}

TEST_CASE("precision consistency d vs d+20") {
    PrecisionContext lo(40), hi(60);
    for (SeriesId id : {SeriesId::s1, SeriesId::s2, SeriesId::cubic}) {
        Complex arg = Complex::of(Rational(3, 4), hi);
        Complex a = named_series(id, Complex::of(Rational(3, 4), lo), lo);
        Complex b = named_series(id, arg, hi);
        CHECK(abs(a - b) < pow10(-38, hi));
    }
}

TEST_CASE("s1/s3 argument substitution h = -i/(u(u^2-1))") {
    PrecisionContext ctx(50);
    Complex u(Real::of(1, ctx), Real::of(1, ctx));
    Complex w = u * (sqr(u) - 1);
    Complex h = Complex(Real::of(0, ctx), Real::of(-1, ctx)) / w;
    Complex lhs = named_series(SeriesId::s3, u, ctx);
    Complex rhs = (2 / (w * 3)) * s1_of(h, ctx);
    CHECK(abs(lhs - rhs) < pow10(-45, ctx));
}

TEST_CASE("power-series kernels converge to their closed forms") {
    PrecisionContext ctx(40);
    Rng rng(4242);
    Real tol = pow10(-30, ctx);
    for (int rep = 0; rep < 10; ++rep) {
        Real g = rng.real_in(0.05, 0.9, ctx);
        Real y = rng.real_in(0.05, 0.95, ctx);
        int a = 1 + rep % 3;
        int b = 1 + (rep / 2) % 2;
        Real base = g * g * pow(1 - y, a) * pow(y, b);
        if (!(base < Real::parse("0.95", ctx))) continue;

        // sum (-1)^n g^2n y^bn (1-y)^an -> 1 / (1 + g^2 (1-y)^a y^b)
        Real term = Real::of(1, ctx);
        Real acc = term;
        for (int n = 1; n < 4000; ++n) {
            term = -(term * base);
            acc += term;
            if (abs(term) < pow10(-34, ctx)) break;
        }
        CHECK(abs(acc - 1 / (1 + base)) < tol);

        // sum g^2n y^bn (1-y)^an (1/2)_n/(1)_n -> 1/sqrt(1 - g^2 (1-y)^a y^b)
        term = Real::of(1, ctx);
        acc = term;
        for (int n = 1; n < 8000; ++n) {
            term = term * base * Real::of(Rational(2 * n - 1, 2 * n), ctx);
            acc += term;
            if (abs(term) < pow10(-34, ctx)) break;
        }
        CHECK(abs(acc - 1 / sqrt(1 - base)) < tol);
    }
}
