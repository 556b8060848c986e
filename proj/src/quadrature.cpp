#include "ladderlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ladderlab/polylog.hpp"

namespace ladderlab {

namespace {

// One tanh-sinh node at parameter t > 0: x = tanh(u), u = (pi/2) sinh t.
// dist_plus = 1 + x and dist_minus = 1 - x are stored separately; both stay
// accurate down to the underflow of exp(-2u).
struct Node {
    Real weight;      // (pi/2) cosh t / cosh^2(u)
    Real dist_plus;   // e^u / cosh u
    Real dist_minus;  // e^-u / cosh u
};

struct LevelTable {
    Node origin;                // t = 0 (only used at level 0)
    std::vector<Node> nodes;    // positive t values of this level
};

std::mutex g_node_mutex;
std::map<std::pair<mpfr_prec_t, int>, std::shared_ptr<const LevelTable>> g_node_cache;

Node make_node(const Real& t, const PrecisionContext& ctx) {
    Real half_pi = const_pi(ctx) / 2;
    mpfr_prec_t p = ctx.bits();
    Real sh(p), ch(p);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    Real u = half_pi * sh;
    Real eu = exp(u);
    Real chu = (eu + 1 / eu) / 2;
    Node n;
    n.weight = half_pi * ch / (chu * chu);
    n.dist_plus = eu / chu;
    n.dist_minus = 1 / (eu * chu);
    return n;
}

// t range covering distances down to ~10^(-2*working digits): algebraic
// endpoint singularities then truncate below the target accuracy.
double t_max_for(const PrecisionContext& ctx) {
    double d10 = 2.0 * ctx.working_digits() + 10.0;
    return std::asinh(d10 * 2.302585092994046 / 3.141592653589793) + 0.1;
}

std::shared_ptr<const LevelTable> level_nodes(int level, const PrecisionContext& ctx) {
    std::pair<mpfr_prec_t, int> key{ctx.bits(), level};
    {
        std::lock_guard<std::mutex> lock(g_node_mutex);
        auto it = g_node_cache.find(key);
        if (it != g_node_cache.end()) return it->second;
    }
    auto table = std::make_shared<LevelTable>();
    double tmax = t_max_for(ctx);
    Real h = pow10(0, ctx);  // 1
    if (level == 0) {
        table->origin = make_node(Real::of(0, ctx), ctx);
        for (long k = 1; k <= static_cast<long>(tmax) + 1; ++k)
            table->nodes.push_back(make_node(Real::of(k, ctx), ctx));
    } else {
        // Odd multiples of 2^-level.
        Real step = Real::of(1, ctx);
        mpfr_div_2si(step.raw(), step.raw(), level, MPFR_RNDN);
        for (long k = 1;; k += 2) {
            Real t = step * k;
            if (t.to_double() > tmax) break;
            table->nodes.push_back(make_node(t, ctx));
        }
    }
    std::lock_guard<std::mutex> lock(g_node_mutex);
    g_node_cache[key] = table;
    return table;
}

Complex eval_at(const Integrand& f, const Real& a, const Real& half_width, const Node& n,
                bool mirrored) {
    const Real& dp = mirrored ? n.dist_minus : n.dist_plus;
    const Real& dm = mirrored ? n.dist_plus : n.dist_minus;
    Real from_a = half_width * dp;
    Real from_b = half_width * dm;
    Real x = a + from_a;
    return f(x, from_a, from_b);
}

}  // namespace

Real pow_rat(const Real& x, const Rational& q) {
    if (q == 0) return 1 - (x - x);
    if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num().get_mpz_t()))
        return pow(x, q.get_num().get_si());
    if (x.sign() <= 0) throw DomainError("pow_rat requires a positive base");
    PrecisionContext ctx(std::max(10, x.prec_digits() - 10), 10);
    return exp(Real::of(q, ctx) * log(x));
}

QuadResult integrate(const Integrand& f, const Real& a, const Real& b,
                     const PrecisionContext& ctx, int max_levels) {
    if (a == b) {
        QuadResult r;
        r.value = Complex::of(0, ctx);
        r.err_estimate = Real::of(0, ctx);
        return r;
    }
    Real half_width = (b - a) / 2;
    Real target = pow10(-(ctx.digits + 3), ctx);

    auto lvl0 = level_nodes(0, ctx);
    Complex sum = eval_at(f, a, half_width, lvl0->origin, false) * lvl0->origin.weight;
    for (const Node& n : lvl0->nodes) {
        sum += eval_at(f, a, half_width, n, false) * n.weight;
        sum += eval_at(f, a, half_width, n, true) * n.weight;
    }
    Complex integral = sum * half_width;  // h = 1 at level 0

    QuadResult result;
    result.err_estimate = abs(integral) + 1;
    Real prev_err = result.err_estimate;
    Real prev_prev_err = prev_err;
    Complex best = integral;
    int best_level = 0;

    for (int level = 1; level <= max_levels; ++level) {
        auto tbl = level_nodes(level, ctx);
        Complex add = Complex::of(0, ctx);
        for (const Node& n : tbl->nodes) {
            add += eval_at(f, a, half_width, n, false) * n.weight;
            add += eval_at(f, a, half_width, n, true) * n.weight;
        }
        sum += add;
        Real h = Real::of(1, ctx);
        mpfr_div_2si(h.raw(), h.raw(), level, MPFR_RNDN);
        Complex next = sum * (half_width * h);
        Real err = abs(next - best);
        best = next;
        best_level = level;
        if (err < target) {
            result.value = best;
            result.err_estimate = err;
            result.levels_used = level;
            return result;
        }
        // Error plateau over two levels: roundoff floor reached.
        if (level >= 3 && err >= prev_err && prev_err >= prev_prev_err) break;
        prev_prev_err = prev_err;
        prev_err = err;
    }
    Real final_err = prev_err;
    if (final_err < pow10(-ctx.digits, ctx)) {
        result.value = best;
        result.err_estimate = final_err;
        result.levels_used = best_level;
        return result;
    }
    throw NonConvergence("integrate: tanh-sinh did not converge within " +
                         std::to_string(max_levels) + " levels (err ~ " + final_err.str(4) + ")");
}

namespace {

bool root_in_unit_interval(const Complex& root, const PrecisionContext& ctx) {
    Real tol = pow10(-(ctx.digits / 2), ctx);
    if (abs(root.im()) > tol) return false;
    return root.re() > -tol && root.re() < 1 + tol;
}

}  // namespace

QuadResult named_integral(NamedIntegral id, const Complex& param, const PrecisionContext& ctx) {
    Real zero = Real::of(0, ctx);
    Real one = Real::of(1, ctx);
    switch (id) {
        case NamedIntegral::w1_arctan: {
            Complex h = param;
            if (h.is_zero()) throw SingularParameter("w1_arctan: h = 0");
            Integrand f = [h](const Real& x, const Real& ya, const Real& yb) {
                (void)x;
                return atan(h * (yb * sqrt(ya))) / (h * (ya * 2));
            };
            return integrate(f, zero, one, ctx);
        }
        case NamedIntegral::w2_arctan: {
            Complex h = param;
            if (h.is_zero()) throw SingularParameter("w2_arctan: h = 0");
            Integrand f = [h](const Real& x, const Real& ya, const Real& yb) {
                (void)x;
                return atan(h * (yb * sqrt(ya))) / (h * yb);
            };
            return integrate(f, zero, one, ctx);
        }
        case NamedIntegral::w1_log: {
            Complex h2 = sqr(param);
            Integrand f = [h2](const Real& x, const Real& xa, const Real& xb) {
                Real omx2 = xb * (1 + x);  // 1 - x^2
                Complex den = 1 + h2 * (x * x * (omx2 * omx2));
                return Complex((x * x * 3 - 1) * log(xa)) / den;
            };
            return integrate(f, zero, one, ctx);
        }
        case NamedIntegral::w2_log: {
            Complex h2 = sqr(param);
            Integrand f = [h2](const Real& x, const Real& xa, const Real& xb) {
                (void)xa;
                Real omx2 = xb * (1 + x);
                Complex den = 1 + h2 * (x * x * (omx2 * omx2));
                return Complex((1 - x * x * 3) * log(omx2)) / den;
            };
            return integrate(f, zero, one, ctx);
        }
        case NamedIntegral::s2_lhs: {
            Complex g = param;
            Integrand f = [g](const Real& x, const Real& xa, const Real& xb) {
                (void)xa;
                Real x2m1 = -(xb * (1 + x));  // x^2 - 1
                return asin(g * (x * x2m1)) * (x * (1 - x * x * 3)) / x2m1;
            };
            return integrate(f, zero, one, ctx);
        }
        case NamedIntegral::cubic_w1:
        case NamedIntegral::cubic_w2: {
            Complex u = param;
            Complex omu = 1 - u;
            if (u.is_zero() || omu.is_zero())
                throw SingularParameter("cubic integral: u(1-u)^2 = 0");
            bool over_x = (id == NamedIntegral::cubic_w2);
            if (!u.im().is_zero() || !(u.re() > 0 && u.re() < 1)) {
                // Off the real singular set: the log argument stays away from
                // zero and the direct expression is stable.
                Complex z = 1 / (u * sqr(omu));
                Integrand f = [z, over_x](const Real& x, const Real& xa, const Real& xb) {
                    Complex arg = 1 - z * (x * (xb * xb));
                    Complex lg = log(arg);
                    return over_x ? lg / xa : lg / xb;
                };
                return integrate(f, zero, one, ctx);
            }
            // Real u in (0, 1): 1 - x(1-x)^2/(u(1-u)^2) vanishes at x = u and
            // x = (2 - u -+ sqrt(4u - 3u^2))/2. Split there and evaluate the
            // log argument in the exactly factored form
            //   (u - x)(xm - x)(xp - x) / (u(1-u)^2),
            // with root-touching factors taken from the node's endpoint
            // distances so no cancellation occurs.
            Real ur = u.re();
            Real s = sqrt(ur * 4 - ur * ur * 3);
            Real xm = (2 - ur - s) / 2;
            Real xp = (2 - ur + s) / 2;
            Real scale = ur * (1 - ur) * (1 - ur);
            std::vector<Real> pts{zero, ur, one};
            if (xm != ur) pts.push_back(xm);
            std::sort(pts.begin(), pts.end());

            QuadResult total;
            total.value = Complex::of(0, ctx);
            total.err_estimate = Real::of(0, ctx);
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                Real lo = pts[i], hi = pts[i + 1];
                bool lo_zero = lo.is_zero();
                bool hi_one = (hi == one);
                auto factor = [&lo, &hi](const Real& root, const Real& x, const Real& fa,
                                         const Real& fb) -> Real {
                    if (root == lo) return -fa;
                    if (root == hi) return fb;
                    return root - x;
                };
                Integrand f = [=](const Real& x, const Real& fa, const Real& fb) -> Complex {
                    Real prod = factor(ur, x, fa, fb) * factor(xm, x, fa, fb) * (xp - x) / scale;
                    Complex lg = log(Complex(prod));
                    if (over_x) return lg / (lo_zero ? fa : x);
                    return lg / (hi_one ? fb : 1 - x);
                };
                QuadResult piece = integrate(f, lo, hi, ctx);
                total.value += piece.value;
                total.err_estimate += piece.err_estimate;
                total.levels_used = std::max(total.levels_used, piece.levels_used);
            }
            return total;
        }
        case NamedIntegral::thm1_integral: {
            Complex u = param;
            Complex u2 = sqr(u);
            Complex s = sqrt(4 - u2 * 3);
            // Quadratic factor roots x = (-+u ± s)/2 and x = ±u must stay off [0, 1].
            for (const Complex& root : {(s - u) / 2, (-s - u) / 2, (s + u) / 2, (-s + u) / 2,
                                        u, -u}) {
                if (root_in_unit_interval(root, ctx))
                    throw SingularParameter("thm1_integral: denominator root in [0, 1]");
            }
            Integrand f = [u2, u](const Real& x, const Real& xa, const Real& xb) {
                (void)xb;
                Complex q = u2 + x * x - 1;
                Complex den = (q + u * x) * (q - u * x) * (u2 - x * x);
                return Complex((x * x * 3 - 1) * log(xa)) / den;
            };
            return integrate(f, zero, one, ctx);
        }
    }
    throw UnknownId("named_integral: unknown id");
}

Real sextic_closed_form_check(const SexticSpec& spec, const PrecisionContext& ctx) {
    if (spec.y <= 0 || spec.y >= 1) throw DomainError("sextic: y must lie in (0, 1)");
    Real y = spec.y;
    Real omy = 1 - y;
    Real ya = pow_rat(omy, spec.a);
    Real yb = pow_rat(y, spec.b);
    Real front = pow_rat(omy, spec.c - spec.a / 2) * pow_rat(y, spec.d - spec.b / 2);
    Real coef = pow_rat(omy, spec.c) * pow_rat(y, spec.d);
    Real kernel = ya * yb;  // (1-y)^a y^b
    Complex h = spec.h;
    Complex inner = h * sqrt(Complex(kernel));

    Complex closed = (spec.kernel == SexticKernel::arctan_type)
                         ? Complex(front) * atan(inner)
                         : Complex(front) * asin(inner);

    if (h.is_zero()) return abs(closed);

    // Integrate over the segment g = h t, t in [0, 1].
    bool arctan_type = (spec.kernel == SexticKernel::arctan_type);
    Integrand f = [&](const Real& t, const Real& ta, const Real& tb) -> Complex {
        (void)ta;
        (void)tb;
        Complex g = h * t;
        Complex g2k = sqr(g) * kernel;
        Complex den = arctan_type ? (1 + g2k) : sqrt(1 - g2k);
        return (Complex(coef) / den) * h;
    };
    QuadResult q = integrate(f, Real::of(0, ctx), Real::of(1, ctx), ctx);
    return abs(q.value - closed);
}

}  // namespace ladderlab
