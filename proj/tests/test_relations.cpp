#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladderlab/identities.hpp"
#include "ladderlab/polylog.hpp"
#include "ladderlab/relations.hpp"
#include "test_support.hpp"

using namespace ladderlab;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

AlgebraicConstant one_half_constant() {
    AlgebraicConstant c;
    c.id = "one_half";
    c.minpoly = RationalPoly::parse("-1,2");
    c.lo = Rational(2, 5);
    c.hi = Rational(3, 5);
    c.closed_form = [](const PrecisionContext& ctx) {
        return Real::of(Rational(1, 2), ctx);
    };
    return c;
}

}  // namespace

TEST_CASE("pslq finds the golden-ratio relation") {
    PrecisionContext ctx(50);
    Real phi = (1 + sqrt(Real::of(5, ctx))) / 2;
    PslqOutcome out = pslq({Real::of(1, ctx), phi, phi * phi}, ctx, Integer(1000000));
    REQUIRE(out.relation.has_value());
    CHECK(out.relation->vec == ints({1, 1, -1}));
    CHECK(out.relation->norm == 1);
    CHECK(out.relation->residual < pow10(-40, ctx));
}

TEST_CASE("pslq certifies no small relation for [1, pi]") {
    PrecisionContext ctx(30);
    PslqOutcome out = pslq({Real::of(1, ctx), const_pi(ctx)}, ctx, Integer(1000000));
    CHECK_FALSE(out.relation.has_value());
    CHECK(out.norm_bound > Real::of(1000000, ctx));
}

TEST_CASE("pslq preconditions") {
    PrecisionContext ctx(20);
    CHECK_THROWS_AS(pslq({Real::of(1, ctx), Real::of(0, ctx)}, ctx, Integer(100)),
                    DomainError);
    CHECK_THROWS_AS(pslq({Real::of(1, ctx)}, ctx, Integer(100)), DomainError);
    // 20 digits < 15 * 3 inputs.
    Real phi = (1 + sqrt(Real::of(5, ctx))) / 2;
    CHECK_THROWS_AS(pslq({Real::of(1, ctx), phi, phi * phi}, ctx, Integer(100)),
                    PrecisionExhausted);
}

TEST_CASE("pslq recovers the first quartic ladder from the 7-element basis") {
    PrecisionContext ctx(120);
    Real r = constant("quartic_r").approx(ctx);
    Complex cr(r);
    std::vector<Real> xs;
    for (int k : {1, 2, 3, 4, 6}) xs.push_back(li2(pow(cr, k), ctx).re());
    xs.push_back(const_pi(ctx) * const_pi(ctx));  // pi^2 slot as in the display
    Real lr = log(r);
    xs.push_back(lr * lr);
    // With the pi^2 slot the integer relation is 6x the zeta(2) one.
    PslqOutcome out = pslq(xs, ctx, Integer(1000000));
    REQUIRE(out.relation.has_value());
    std::vector<Integer> expect = ints({144, -198, -48, 18, 18, -1, -36});
    CHECK(out.relation->vec == expect);

    // zeta(2) slot normalization gives the display vector itself.
    xs[5] = const_zeta2(ctx);
    PslqOutcome out2 = pslq(xs, ctx, Integer(1000000));
    REQUIRE(out2.relation.has_value());
    CHECK(out2.relation->vec == ints({24, -33, -8, 3, 3, -1, -6}));
}

TEST_CASE("pslq is invariant under common input scaling") {
    PrecisionContext ctx(50);
    Real phi = (1 + sqrt(Real::of(5, ctx))) / 2;
    Real scale = Real::parse("3.7", ctx);
    PslqOutcome a = pslq({Real::of(1, ctx), phi, phi * phi}, ctx, Integer(1000000));
    PslqOutcome b =
        pslq({scale, phi * scale, phi * phi * scale}, ctx, Integer(1000000));
    REQUIRE(a.relation.has_value());
    REQUIRE(b.relation.has_value());
    CHECK(a.relation->vec == b.relation->vec);
}

TEST_CASE("rational reconstruction") {
    PrecisionContext ctx(50);
    auto r1 = rational_reconstruct(Real::of(Rational(1, 3), ctx), Integer(1000000));
    REQUIRE(r1.has_value());
    CHECK(*r1 == Rational(1, 3));

    // 4 pi^2/21 over pi^2, the Bytsko constant.
    Real pi = const_pi(ctx);
    Real x = (pi * pi * 4 / 21) / (pi * pi);
    auto r2 = rational_reconstruct(x, Integer(1000000));
    REQUIRE(r2.has_value());
    CHECK(*r2 == Rational(4, 21));

    CHECK_FALSE(rational_reconstruct(sqrt(Real::of(2, ctx)), Integer(1000000)).has_value());
}

TEST_CASE("ladder_value: degenerate and gm_a ladders") {
    PrecisionContext ctx(100);
    // All A_r = 0, N = 1: the value is Li2(u).
    LadderRelation trivial;
    trivial.base = one_half_constant();
    trivial.index = 1;
    trivial.coeffs[1] = Rational(1);
    Complex lv = ladder_value(trivial, ctx);
    CHECK(abs(lv - li2(Complex::of(Rational(1, 2), ctx), ctx)) < pow10(-95, ctx));

    // gm_a in Li2 form: 2 Li2(a^3) - 2 Li2(a^2) - 11 Li2(a) + 3 zeta(2) - ln^2 a = 0.
    LadderRelation gm;
    gm.base = constant("gm_a");
    gm.index = 3;
    gm.coeffs[1] = Rational(-11);
    gm.coeffs[2] = Rational(-2);
    gm.coeffs[3] = Rational(2);
    gm.pi2_coeff = Rational(1, 2);  // 3 zeta(2) = pi^2/2
    gm.log2_coeff = Rational(-1);
    CHECK(abs(ladder_residual(gm, ctx)) < pow10(-90, ctx));
    // The reduction scalar: L_2(N, u) = -pi2_coeff pi^2 / (coeffs[N] N), a
    // rational multiple of zeta(2); here -(1/2) zeta(2).
    Complex lval = ladder_value(gm, ctx);
    auto d2 = rational_reconstruct(lval.re() / const_zeta2(ctx), Integer(1000000));
    REQUIRE(d2.has_value());
    CHECK(*d2 == Rational(-1, 2));
}

TEST_CASE("ladder_search recovers both quartic ladders") {
    PrecisionContext ctx(150);
    Integer max_norm(10000000000L);

    auto found1 = ladder_search(constant("quartic_r"), 6, ctx, max_norm);
    REQUIRE(found1.size() == 1);
    const LadderRelation& l1 = found1.front();
    CHECK(l1.index == 6);
    CHECK(l1.coeffs.at(1) == Rational(24));
    CHECK(l1.coeffs.at(2) == Rational(-33));
    CHECK(l1.coeffs.at(3) == Rational(-8));
    CHECK(l1.coeffs.at(4) == Rational(3));
    CHECK(l1.coeffs.at(6) == Rational(3));
    CHECK(l1.coeffs.count(5) == 0);
    CHECK(l1.zeta2_coeff() == Rational(-1));
    CHECK(l1.log2_coeff == Rational(-6));

    auto found2 = ladder_search(constant("quartic_r2"), 6, ctx, max_norm);
    REQUIRE(found2.size() == 1);
    const LadderRelation& l2 = found2.front();
    CHECK(l2.coeffs.at(1) == Rational(24));
    CHECK(l2.coeffs.at(2) == Rational(21));
    CHECK(l2.coeffs.at(3) == Rational(-8));
    CHECK(l2.coeffs.at(4) == Rational(-3));
    CHECK(l2.coeffs.at(6) == Rational(1));
    CHECK(l2.zeta2_coeff() == Rational(-11));
    CHECK(l2.log2_coeff == Rational(6));
}

TEST_CASE("ladder_search negative control at base 1/2") {
    // The documented outcome: the Landen-degenerate relation
    // 2 Li2(1/2) - zeta(2) + ln^2(1/2) = 0 (norm 2), nothing else.
    PrecisionContext ctx(80);
    auto found = ladder_search(one_half_constant(), 2, ctx, Integer(1000));
    REQUIRE(found.size() == 1);
    const LadderRelation& l = found.front();
    CHECK(l.coeffs.size() == 1);
    CHECK(l.coeffs.at(1) == Rational(2));
    CHECK(l.zeta2_coeff() == Rational(-1));
    CHECK(l.log2_coeff == Rational(1));
}

TEST_CASE("true relations survive re-verification at doubled precision") {
    PrecisionContext ctx(75);
    auto found = ladder_search(constant("gm_a"), 3, ctx, Integer(1000000));
    REQUIRE(found.size() == 1);
    Real r1 = abs(ladder_residual(found.front(), ctx));
    PrecisionContext ctx2(150);
    Real r2 = abs(ladder_residual(found.front(), ctx2));
    // A true relation collapses well past the first detection scale; a
    // spurious one would sit near 10^-75 at both precisions.
    CHECK(r1 < pow10(-65, ctx));
    CHECK(r2 < pow10(-112, ctx2));
}

TEST_CASE("ladder_search preconditions") {
    PrecisionContext ctx(40);
    CHECK_THROWS_AS(ladder_search(constant("quartic_r"), 6, ctx, Integer(100)),
                    PrecisionExhausted);
    PrecisionContext ok(80);
    CHECK_THROWS_AS(ladder_search(constant("quartic_u1"), 2, ok, Integer(100)), DomainError);
}
