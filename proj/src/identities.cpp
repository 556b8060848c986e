#include "ladderlab/identities.hpp"

#include <chrono>

#include "ladderlab/algebra.hpp"
#include "ladderlab/hyperseries.hpp"
#include "ladderlab/polylog.hpp"
#include "ladderlab/relations.hpp"

namespace ladderlab {

namespace {

Complex get_param(const ParamSet& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw ParameterOutOfRegion("missing parameter '" + name + "'");
    return it->second;
}

Complex at_ctx(const Complex& z, const PrecisionContext& ctx) {
    Real re(ctx.bits()), im(ctx.bits());
    mpfr_set(re.raw(), z.re().raw(), MPFR_RNDN);
    mpfr_set(im.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(re, im);
}

Complex cln(const Complex& z) { return log(z); }

Complex half_sq(const Complex& z) { return z * z / 2; }

void require_upper_region(const Complex& u) {
    if (u.im().is_zero())
        throw ParameterOutOfRegion("u must be non-real (real u is a boundary limit)");
    if (u.re().sign() < 0) throw ParameterOutOfRegion("u must satisfy Re u >= 0");
}

void require_real_in(const Complex& u, const Rational& lo, const Rational& hi,
                     const std::string& what) {
    if (!u.im().is_zero())
        throw ParameterOutOfRegion(what + ": parameter must be real");
    PrecisionContext tiny(10, 0);
    if (!(u.re() > Real::of(lo, tiny) && u.re() < Real::of(hi, tiny)))
        throw ParameterOutOfRegion(what + ": parameter outside documented region");
}

}  // namespace

// ---------------------------------------------------------------------------
// Terms of the six-part functional-equation chain, principal branches throughout.

Theorem1Terms theorem1_terms(const Complex& uu, const PrecisionContext& ctx) {
    Complex u = at_ctx(uu, ctx);
    require_upper_region(u);
    Complex u2 = sqr(u);
    Complex s4 = sqrt(4 - u2 * 3);   // sqrt(4 - 3u^2)
    Complex s3 = sqrt(u2 * 3 - 4);   // sqrt(3u^2 - 4)
    Complex i = Complex::i(ctx);
    Complex is3 = i * s3;
    Real pi = const_pi(ctx);
    Complex pi2_6 = Complex(pi * pi / 6);
    Real ln2 = const_ln2(ctx);

    Theorem1Terms t;
    t.A = li2((s4 + u2 - 2) / (u * (u + 1)), ctx) - li2((s4 + u2 - 2) / ((u - 1) * u), ctx);
    t.B = half_sq(cln((-is3 + u + 2) / 4)) - half_sq(cln((-is3 - u2 + 2) / (u * (u + 1)))) +
          half_sq(cln((is3 + u + 2) / 4)) - pi2_6;
    t.J = (sqr(cln(-4 / (-is3 + u + 2))) + sqr(cln(-4 / (is3 + u + 2))) -
           sqr(cln(-4 / (-is3 - u + 2))) - sqr(cln(-4 / (is3 - u + 2)))) /
          4;
    t.C = -(cln((-is3 + u + 2) / 4) * cln((is3 - u + 2) / 4)) / 2 -
          (cln((is3 + u + 2) / 4) * cln((-is3 - u + 2) / 4)) / 2 + pi2_6;
    t.H = sqr(cln(2 / (u - 1))) / 4 - sqr(cln(-2 / (u + 1))) / 4 +
          (cln((1 - u) / 2) * cln((u + 1) / 2)) / 2 -
          (i * Real(pi) / 2) * cln((u + 1) / (u - 1)) -
          Complex(Real(ln2)) * cln((u + 1) / (u - 1)) - pi2_6 / 2;
    t.D = li2((1 - u) / 2, ctx) + Complex(Real(ln2)) * cln((u - 1) / (u + 1)) +
          (Complex(ln2 * 2) + i * Real(pi) / 2) * cln((u + 1) / (u - 1));
    t.K = (li2(2 / (-s4 + u), ctx) - li2(2 / (s4 - u), ctx) - li2(-2 / (s4 + u), ctx) +
           li2(2 / (s4 + u), ctx) + li2(-1 / u, ctx) - li2(1 / u, ctx)) /
          2;
    t.M = -li2((s4 - u + 2) / 4, ctx) - li2((-s4 - u + 2) / 4, ctx);
    return t;
}

Complex theorem1_s3(const Complex& uu, const PrecisionContext& ctx) {
    Complex u = at_ctx(uu, ctx);
    require_upper_region(u);
    Complex w = u * (sqr(u) - 1);
    // Convergence of the bracket series needs |u(u^2-1)| > 2/(3 sqrt 3).
    Real bound = 2 / (sqrt(Real::of(3, ctx)) * 3);
    if (!(abs(w) > bound))
        throw ParameterOutOfRegion("theorem1_s3: |u(u^2-1)| <= 2/(3 sqrt 3), series diverges");
    return named_series(SeriesId::s3, u, ctx);
}

namespace {

// ---------------------------------------------------------------------------
// Shared evaluator helpers

Complex Lp(const Complex& z, const PrecisionContext& ctx) {
    return rogers_L(z, CutSide::principal, ctx);
}

Complex li2p(const Complex& z, const PrecisionContext& ctx) {
    return li2(z, CutSide::principal, ctx);
}

Real const_of(const std::string& id, const PrecisionContext& ctx) {
    return constant(id).approx(ctx);
}

// Theorem 1 proof antiderivative, principal branches.
Complex thm1_antiderivative(const Complex& x, const Complex& u, const PrecisionContext& ctx) {
    Complex u2 = sqr(u);
    Complex s4 = sqrt(4 - u2 * 3);
    Complex pref = 1 / (u * 2 - u * u2 * 2);
    Complex lx = cln(x);
    Complex sum =
        li2p(-(x * 2) / (u - s4), ctx) - li2p((x * 2) / (u - s4), ctx) +
        li2p(-(x * 2) / (u + s4), ctx) - li2p((x * 2) / (u + s4), ctx) - li2p(-(x / u), ctx) +
        li2p(x / u, ctx) + lx * cln((s4 - u - x * 2) / (s4 - u)) -
        lx * cln((s4 + u - x * 2) / (s4 + u)) - lx * cln((s4 - u + x * 2) / (s4 - u)) +
        lx * cln((s4 + u + x * 2) / (s4 + u)) + lx * cln((u - x) / u) - lx * cln((u + x) / u);
    return pref * sum;
}

Complex thm1_partial_fraction_integrand(const Complex& x, const Complex& u,
                                        const PrecisionContext& ctx) {
    (void)ctx;
    Complex u2 = sqr(u);
    Complex x2 = sqr(x);
    Complex q = u2 + x2 - 1;
    return (x2 * 3 - 1) * cln(x) / ((q + u * x) * (q - u * x) * (u2 - x2));
}

// ---------------------------------------------------------------------------
// Registry

std::vector<IdentityCase> build_registry() {
    std::vector<IdentityCase> reg;

    // Default tolerances (zero-type digits-10, pi2-type digits/2-5) live in
    // default_tol_for; only the finite-difference case overrides.
    auto fd_tol = [](const PrecisionContext& ctx) { return ctx.digits / 3 - 5; };

    auto add = [&](IdentityCase c) { reg.push_back(std::move(c)); };
    auto rp = [](const char* name, Rational re, Rational im = Rational(0)) {
        return std::pair<std::string, std::pair<Rational, Rational>>(
            name, {std::move(re), std::move(im)});
    };

    // --- classical dilogarithm identities -----------------------------------
    add({"dup", Expected::zero, std::nullopt, "x in (-1, 1)",
         {{rp("x", Rational(37, 100))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex x = get_param(p, "x");
             return li2p(x, ctx) * 2 + li2p(-x, ctx) * 2 - li2p(sqr(x), ctx);
         }});
    add({"reflection", Expected::zero, std::nullopt, "x in (0, 1)",
         {{rp("x", Rational(37, 100))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex x = get_param(p, "x");
             return li2p(x, ctx) + li2p(1 - x, ctx) - Complex(const_zeta2(ctx)) +
                    cln(x) * cln(1 - x);
         }});
    add({"landen", Expected::zero, std::nullopt, "x in (0, 1)",
         {{rp("x", Rational(37, 100))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex x = get_param(p, "x");
             return li2p(-x, ctx) + li2p(x / (1 + x), ctx) + half_sq(cln(1 + x));
         }});
    add({"five_term", Expected::zero, std::nullopt, "(x, y) in (0, 1)^2",
         {{rp("x", Rational(1, 2)), rp("y", Rational(1, 3))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex x = get_param(p, "x");
             Complex y = get_param(p, "y");
             Complex xy = x * y;
             return Lp(x, ctx) + Lp(y, ctx) - Lp(xy, ctx) -
                    Lp(x * (1 - y) / (1 - xy), ctx) - Lp(y * (1 - x) / (1 - xy), ctx);
         }});
    add({"four_term", Expected::zero, std::nullopt, "z in (0, 1)",
         {{rp("z", Rational(37, 100))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex z = get_param(p, "z");
             Real pi = const_pi(ctx);
             return li2p(z, ctx) - li2p(-z, ctx) + li2p((1 - z) / (1 + z), ctx) -
                    li2p((z - 1) / (1 + z), ctx) - Complex(pi * pi / 4) -
                    cln(z) * cln((1 + z) / (1 - z));
         }});

    // --- Theorem 1 chain -----------------------------------------------------
    add({"thm1_chain", Expected::zero, std::nullopt, "u non-real, Re u >= 0",
         {{rp("u", Rational(1), Rational(1))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Theorem1Terms t = theorem1_terms(get_param(p, "u"), ctx);
             return t.A + t.B + t.J + t.C + t.H + t.D - t.K;
         }});
    add({"thm1_s3", Expected::zero, std::nullopt,
         "u non-real, Re u >= 0, |u(u^2-1)| > 2/(3 sqrt 3)",
         {{rp("u", Rational(1), Rational(1))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex u = get_param(p, "u");
             Theorem1Terms t = theorem1_terms(u, ctx);
             return theorem1_s3(u, ctx) - t.K;
         }});
    add({"thm1_M", Expected::zero, std::nullopt, "u non-real, Re u >= 0",
         {{rp("u", Rational(1), Rational(1))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Theorem1Terms t = theorem1_terms(get_param(p, "u"), ctx);
             return t.M - (t.A + t.B);
         }});
    add({"thm1_antideriv", Expected::zero, std::nullopt,
         "x in (0, 1), u non-real; central-difference check",
         {{rp("x", Rational(1, 5)), rp("u", Rational(1), Rational(1))},
          {rp("x", Rational(3, 10)), rp("u", Rational(1), Rational(1))},
          {rp("x", Rational(7, 10)), rp("u", Rational(1), Rational(1))}},
         fd_tol,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex x = get_param(p, "x");
             Complex u = get_param(p, "u");
             require_upper_region(at_ctx(u, ctx));
             Real h = pow10(-(ctx.digits / 3), ctx);
             Complex fp = thm1_antiderivative(x + Complex(h), u, ctx);
             Complex fm = thm1_antiderivative(x - Complex(h), u, ctx);
             Complex deriv = (fp - fm) / Complex(h * 2);
             return deriv - thm1_partial_fraction_integrand(x, u, ctx);
         }});

    // --- Theorem 2: six-term functional equation -----------------------------
    add({"thm2_six_term", Expected::pi2_rational_unknown, std::nullopt,
         "real u in (0, 2/sqrt 3)",
         {{rp("u", Rational(2, 5))}, {rp("u", Rational(9, 20))}, {rp("u", Rational(1, 2))}},
         nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex u = at_ctx(get_param(p, "u"), ctx);
             require_real_in(u, Rational(0), Rational(115, 100), "thm2_six_term");
             Complex u2 = sqr(u);
             Complex s = sqrt(4 - u2 * 3);
             Complex den_m = -(u * (u + 1));
             Complex den_p = u * (u + 1);
             Complex w = (1 - u) / (u + 1);
             return Lp((u2 + s - 2) / den_m, ctx) - Lp((u2 + s - 2) / den_p, ctx) * 3 -
                    Lp(w, ctx) * 4 + Lp((u2 - s - 2) / den_m, ctx) -
                    Lp((u2 - s - 2) / den_p, ctx) * 3 +
                    Lp(sqr(w), ctx) * Real::of(Rational(3, 2), ctx);
         }});

    // --- Theorem 3: three-term equation --------------------------------------
    add({"thm3_three_term", Expected::zero, std::nullopt, "|u| < 1",
         {{rp("u", Rational(3, 10))}, {rp("u", Rational(1, 2))}, {rp("u", Rational(7, 10))}},
         nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex u = at_ctx(get_param(p, "u"), ctx);
             if (!(abs(u) < 1)) throw ParameterOutOfRegion("thm3: requires |u| < 1");
             Complex u2 = sqr(u);
             Complex s = sqrt(u * (4 - u * 3));
             Complex den = sqr(u - 1) * 2;
             Complex lhs = -li2p((u2 * 2 - u * 3 + s) / den, ctx) -
                           li2p((u2 * 2 - u * 3 - s) / den, ctx);
             Complex rhs = half_sq(cln(1 - (u - s) / ((u - 1) * 2))) * 3 -
                           li2p(u / (u - 1), ctx);
             return lhs - rhs;
         }});
    add({"cubic_L_three_term", Expected::pi2_rational, Rational(1, 3), "real u in (0, 1)",
         {{rp("u", Rational(3, 10))}, {rp("u", Rational(1, 2))}, {rp("u", Rational(7, 10))}},
         nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex u = at_ctx(get_param(p, "u"), ctx);
             require_real_in(u, Rational(0), Rational(1), "cubic_L_three_term");
             Complex s = sqrt(u * 4 - sqr(u) * 3);
             return Lp((2 - s - u) / 2, ctx) + Lp((2 + s - u) / 2, ctx) + Lp(u, ctx);
         }});

    // --- multiplication-formula form used for Eq. (25) -----------------------
    add({"mult3", Expected::zero, std::nullopt, "real r",
         {{rp("r", Rational(1, 2))}}, nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex r = get_param(p, "r");
             Real pi = const_pi(ctx);
             Complex w = exp(Complex(Real(pi.prec_bits()), pi / 3));  // e^{i pi/3}
             Complex lhs = -li2p(-r, ctx) + li2p(-pow(r, 3), ctx) / 3;
             Complex rhs = li2p(r * w, ctx) + li2p(r * conj(w), ctx);
             return lhs - rhs;
         }});

    // --- Loxton-Lewin trio and the log-free rewrite --------------------------
    auto ll_case = [](const char* base_id, long c6, long c3, long c2, long c1, long c0) {
        return [base_id, c6, c3, c2, c1, c0](const ParamSet&, const PrecisionContext& ctx) {
            Real b = const_of(base_id, ctx);
            Complex v = Complex::of(0, ctx);
            Complex cb(b);
            if (c6) v += Lp(pow(cb, 6), ctx) * c6;
            if (c3) v += Lp(pow(cb, 3), ctx) * c3;
            if (c2) v += Lp(sqr(cb), ctx) * c2;
            if (c1) v += Lp(cb, ctx) * c1;
            if (c0) v += Complex(const_zeta2(ctx)) * c0;  // L(1) = pi^2/6
            return v;
        };
    };
    add({"ll_kappa", Expected::zero, std::nullopt, "none (kappa = sec(pi/9)/2)", {{}},
         nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real k = const_of("kappa", ctx);
             Complex ck(k);
             return Lp(pow(ck, 3), ctx) * 3 - Lp(sqr(ck), ctx) * 9 - Lp(ck, ctx) * 9 +
                    Complex(const_zeta2(ctx)) * 7;
         }});
    add({"ll_lambda", Expected::zero, std::nullopt, "none (lambda = sec(2pi/9)/2)", {{}},
         nullptr, ll_case("lambda", 3, -6, -27, 18, 2)});
    add({"ll_mu", Expected::zero, std::nullopt, "none (mu = 2cos(4pi/9))", {{}}, nullptr,
         ll_case("mu", 3, -6, -27, 18, -2)});
    add({"ll_mu_li2", Expected::zero, std::nullopt, "none; log-free rewrite", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real mu = const_of("mu", ctx);
             Complex cm(mu);
             Real pi = const_pi(ctx);
             return li2p(-cm, ctx) + li2p(sqr(cm), ctx) - li2p(-pow(cm, 3), ctx) / 3 +
                    Complex(pi * pi / 54);
         }});

    // --- Gordon-McIntosh trio -------------------------------------------------
    add({"gm_a", Expected::zero, std::nullopt, "none (a = 2 sqrt3 cos(5pi/18) - 2)", {{}},
         nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real a = const_of("gm_a", ctx);
             Complex ca(a);
             return Lp(pow(ca, 3), ctx) * 2 - Lp(sqr(ca), ctx) * 2 - Lp(ca, ctx) * 11 +
                    Complex(const_zeta2(ctx)) * 3;
         }});
    add({"gm_b", Expected::zero, std::nullopt, "none (b = 2 sqrt3 cos(11pi/18) + 2)", {{}},
         nullptr, ll_case("gm_b", 2, -4, -15, 22, -6)});
    add({"gm_c", Expected::zero, std::nullopt, "none (c = 2 sqrt3 cos(7pi/18) - 1)", {{}},
         nullptr, ll_case("gm_c", 2, -4, -15, 22, -4)});

    // --- quartic ladders ------------------------------------------------------
    add({"quartic_ladder_1", Expected::zero, std::nullopt,
         "none (r from r^4 + r^3 - 6r^2 + r + 1)", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real r = const_of("quartic_r", ctx);
             Complex cr(r);
             Real lr = log(r);
             return li2p(pow(cr, 6), ctx) * 3 + li2p(pow(cr, 4), ctx) * 3 -
                    li2p(pow(cr, 3), ctx) * 8 - li2p(sqr(cr), ctx) * 33 +
                    li2p(cr, ctx) * 24 - Complex(const_zeta2(ctx)) -
                    Complex(lr * lr * 6);
         }});
    add({"quartic_ladder_2", Expected::zero, std::nullopt,
         "none (r2 from r^4 - r^3 - 6r^2 - r + 1)", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real r = const_of("quartic_r2", ctx);
             Complex cr(r);
             Real lr = log(r);
             return li2p(pow(cr, 6), ctx) - li2p(pow(cr, 4), ctx) * 3 -
                    li2p(pow(cr, 3), ctx) * 8 + li2p(sqr(cr), ctx) * 21 +
                    li2p(cr, ctx) * 24 - Complex(const_zeta2(ctx)) * 11 +
                    Complex(lr * lr * 6);
         }});

    // --- Bytsko / Watson ------------------------------------------------------
    add({"bytsko_7term", Expected::pi2_rational_unknown, std::nullopt,
         "real u in (0, 2/sqrt 3); proof's y-pair arguments",
         {{rp("u", Rational(2, 5))}, {rp("u", Rational(1, 2))}, {rp("u", Rational(7, 10))}},
         nullptr,
         [](const ParamSet& p, const PrecisionContext& ctx) {
             Complex u = at_ctx(get_param(p, "u"), ctx);
             require_real_in(u, Rational(0), Rational(115, 100), "bytsko_7term");
             Complex u2 = sqr(u);
             Complex s = sqrt(4 - u2 * 3);
             return -Lp((-u - s) / 2, ctx) * 3 - Lp((-u + s) / 2, ctx) * 3 -
                    Lp((1 - u) / (u + 1), ctx) + Lp((u - 1) / (u + 1), ctx) +
                    Lp((u + 2 - u2 * 2 - s) / (u * 2), ctx) +
                    Lp((u + 2 - u2 * 2 + s) / (u * 2), ctx) - Lp(u, ctx) * 3;
         }});
    add({"bytsko_2term", Expected::zero, std::nullopt,
         "none (x0, y from the sextic x^6 + x^5 - 2x^3 + 2x - 1)", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real x0 = const_of("bytsko_x0", ctx);
             Real y = const_of("bytsko_y", ctx);
             Real pi = const_pi(ctx);
             return Lp(Complex(x0), ctx) + Lp(Complex(y), ctx) -
                    Complex(pi * pi * 4 / 21);
         }});
    add({"watson_3pi7", Expected::pi2_rational, Rational(4, 21),
         "none (u = 2cos(3pi/7))", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             Real u = const_of("watson_u", ctx);
             Complex cu(u);
             return Lp(cu, ctx) * 2 + Lp(sqr(cu), ctx);
         }});
    add({"nahm_system", Expected::zero, std::nullopt,
         "none (alpha = x0, beta = (1-alpha)/alpha^3)", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             NahmSystem ns = nahm_system(ctx);
             Real y = const_of("bytsko_y", ctx);
             Real a = ns.alpha, b = ns.beta;
             Real r1 = abs(1 - a - a * a * a * b);
             Real r2 = abs(1 - a * b * b * b - a * b * b);
             Real r3 = abs(a * b * b * b - y);
             return Complex(r1 + r2 + r3, Real(ctx.bits()));
         }});
    add({"eq_roots_closed", Expected::zero, std::nullopt,
         "none (trig closed forms of the sextic roots)", {{}}, nullptr,
         [](const ParamSet&, const PrecisionContext& ctx) {
             const RationalPoly& sextic = constant("bytsko_x0").minpoly;
             Real s = sin(const_pi(ctx) / 14);
             Real root = sqrt(1 - s * s * 3);
             Real v0 = abs(sextic.eval(root - s));
             Real v1 = abs(sextic.eval(-root - s));
             return Complex(v0 + v1, Real(ctx.bits()));
         }});

    return reg;
}

}  // namespace

const std::vector<IdentityCase>& identity_registry() {
    static const std::vector<IdentityCase> reg = build_registry();
    return reg;
}

const IdentityCase& identity_case(const std::string& id) {
    for (const IdentityCase& c : identity_registry())
        if (c.id == id) return c;
    throw UnknownId("identity_case: unknown id '" + id + "'");
}

std::vector<std::string> identity_ids() {
    std::vector<std::string> ids;
    for (const IdentityCase& c : identity_registry()) ids.push_back(c.id);
    return ids;
}

ParamSet materialize(const RationalParams& params, const PrecisionContext& ctx) {
    ParamSet out;
    for (const auto& [name, val] : params)
        out.emplace(name, Complex(Real::of(val.first, ctx), Real::of(val.second, ctx)));
    return out;
}

Complex residual(const std::string& id, const ParamSet& params, const PrecisionContext& ctx) {
    return identity_case(id).eval(params, ctx);
}

std::optional<Rational> reconstruct_pi2(const Complex& value, const Integer& max_den,
                                        const PrecisionContext& ctx) {
    Real pi = const_pi(ctx);
    Real ratio = value.re() / (pi * pi);
    return rational_reconstruct(ratio, max_den);
}

std::string render_params(const ParamSet& params) {
    std::string out;
    for (const auto& [name, val] : params) {
        if (!out.empty()) out += ", ";
        out += name + "=" + val.str(17);
    }
    return out;
}

namespace {

int default_tol_for(const IdentityCase& c, const PrecisionContext& ctx) {
    if (c.default_tol_exp) return c.default_tol_exp(ctx);
    if (c.expected == Expected::zero) return ctx.digits - 10;
    return ctx.digits / 2 - 5;
}

}  // namespace

VerificationReport verify(const std::string& id, const ParamSet& params,
                          const PrecisionContext& ctx, int tol_exp, const Integer& max_den) {
    const IdentityCase& c = identity_case(id);
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = id;
    rep.params = render_params(params);
    rep.digits = ctx.digits;
    int te = tol_exp > 0 ? tol_exp : default_tol_for(c, ctx);
    Real tol = pow10(-te, ctx);

    Complex value = c.eval(params, ctx);
    rep.residual_im_abs = abs(value.im());
    if (c.expected == Expected::zero) {
        rep.residual_abs = abs(value);
        rep.pass = rep.residual_abs < tol;
    } else {
        auto q = reconstruct_pi2(value, max_den, ctx);
        if (q) {
            Real pi = const_pi(ctx);
            rep.pi2_coeff = q;
            rep.residual_abs = abs(value.re() - Real::of(*q, ctx) * pi * pi);
            rep.pass = rep.residual_abs < tol;
            if (c.expected_pi2 && *q != *c.expected_pi2) rep.pass = false;
        } else {
            rep.residual_abs = abs(value.re());
            rep.pass = false;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

std::vector<VerificationReport> verify_defaults(const std::string& id,
                                                const PrecisionContext& ctx, int tol_exp,
                                                const Integer& max_den) {
    const IdentityCase& c = identity_case(id);
    std::vector<VerificationReport> reports;
    for (const RationalParams& rparams : c.defaults)
        reports.push_back(verify(id, materialize(rparams, ctx), ctx, tol_exp, max_den));
    if (c.expected != Expected::zero && reports.size() > 1) {
        // The reconstructed rational must agree across the documented set.
        bool consistent = true;
        for (const VerificationReport& r : reports) {
            if (!r.pi2_coeff || *r.pi2_coeff != *reports.front().pi2_coeff) consistent = false;
        }
        if (!consistent)
            for (VerificationReport& r : reports) r.pass = false;
    }
    return reports;
}

}  // namespace ladderlab
