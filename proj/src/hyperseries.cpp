#include "ladderlab/hyperseries.hpp"

namespace ladderlab {

namespace {

void check_den_params(const BracketSeries& s) {
    for (const Rational& a : s.den_params) {
        if (a <= 0 && a.get_den() == 1)
            throw DomainError("BracketSeries: non-positive integer denominator parameter");
    }
}

}  // namespace

ConvergenceVerdict converges(const BracketSeries& s, const Complex& arg) {
    int digits = std::max(10, static_cast<int>(arg.prec_bits() / 3.3219280948873623) - 10);
    PrecisionContext ctx(digits, 10);
    Real az = abs(arg);
    ConvergenceVerdict v;
    if (az.is_zero() && s.arg_power < 0) {
        v.converges = false;
        v.ratio_limit = Real::of(1, ctx);
        return v;
    }
    Real base = abs(Real::of(s.ratio_base, ctx));
    v.ratio_limit = s.arg_power == 0 ? base : base * pow(az, s.arg_power);
    v.converges = v.ratio_limit < 1;
    return v;
}

Complex eval_bracket(const BracketSeries& s, const Complex& arg, const PrecisionContext& ctx,
                     SeriesEvalInfo* info) {
    check_den_params(s);
    ConvergenceVerdict verdict = converges(s, arg);
    if (!verdict.converges)
        throw DivergentSeries("eval_bracket: term ratio " + verdict.ratio_limit.str(6) + " >= 1");
    bool slow = verdict.ratio_limit > Real::of(Rational(999, 1000), ctx);

    // Geometric tail majorant once the running ratio settles under this bound.
    Real gbound = verdict.ratio_limit + Real::of(Rational(1, 1000), ctx);
    if (gbound >= 1) gbound = (verdict.ratio_limit + 1) / 2;
    Real tail_scale = gbound / (1 - gbound);
    Real eps = pow10(-(ctx.working_digits() + 2), ctx);

    Complex w = pow(Complex(Real::of(1, ctx), Real::of(0, ctx)) * arg, s.arg_power);
    Complex term = Complex::of(1, ctx);
    Complex sum = term;
    long n = 0;
    for (; n < 100000; ++n) {
        // Exact rational step: ratio_base * prod(num_i + n) / prod(den_i + n).
        Rational step = s.ratio_base;
        for (const Rational& a : s.num_params) step *= a + n;
        for (const Rational& a : s.den_params) step /= a + n;
        term = term * w * Real::of(step, ctx);
        sum += term;
        if (abs(term) * tail_scale < eps) break;
    }
    if (n >= 100000) throw NonConvergence("eval_bracket: series too slow to reach tolerance");
    if (info) {
        info->terms = n + 2;
        info->slow = slow;
    }
    return sum;
}

BracketSeries named_bracket(SeriesId id) {
    switch (id) {
        case SeriesId::s1:
            return {{Rational(1, 2), Rational(1, 2), Rational(1)},
                    {Rational(5, 6), Rational(7, 6), Rational(3, 2)},
                    Rational(-4, 27),
                    2};
        case SeriesId::s2:
            return {{Rational(1, 2), Rational(1, 2), Rational(1, 2)},
                    {Rational(7, 6), Rational(11, 6), Rational(3, 2)},
                    Rational(4, 27),
                    2};
        case SeriesId::s3:
            return {{Rational(1, 2), Rational(1, 2), Rational(1)},
                    {Rational(5, 6), Rational(7, 6), Rational(3, 2)},
                    Rational(4, 27),
                    -2};
        case SeriesId::cubic:
            return {{Rational(1), Rational(1), Rational(3, 2)},
                    {Rational(4, 3), Rational(5, 3), Rational(2)},
                    Rational(4, 27),
                    1};
    }
    throw UnknownId("named_bracket: unknown series id");
}

Complex named_bracket_arg(SeriesId id, const Complex& arg) {
    if (id == SeriesId::s3) return arg * (sqr(arg) - 1);
    return arg;
}

Complex named_series(SeriesId id, const Complex& arg, const PrecisionContext& ctx) {
    BracketSeries s = named_bracket(id);
    switch (id) {
        case SeriesId::s1:
            return eval_bracket(s, arg, ctx);
        case SeriesId::s2:
            return eval_bracket(s, arg, ctx) * arg * Real::of(Rational(-4, 15), ctx);
        case SeriesId::s3: {
            Complex w = named_bracket_arg(id, arg);
            if (w.is_zero()) throw DivergentSeries("s3: u(u^2-1) = 0");
            return eval_bracket(s, w, ctx) * (2 / (w * 3));
        }
        case SeriesId::cubic:
            return eval_bracket(s, arg, ctx) * arg * Real::of(Rational(-1, 6), ctx);
    }
    throw UnknownId("named_series: unknown series id");
}

}  // namespace ladderlab
