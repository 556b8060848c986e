#include "ladderlab/polylog.hpp"

#include <mutex>
#include <vector>

namespace ladderlab {

namespace detail {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, ...

void extend_bernoulli(int n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m in terms of earlier ones.
    if (g_bernoulli.empty()) {
        g_bernoulli.emplace_back(1);
        g_bernoulli.emplace_back(Rational(-1, 2));
    }
    while (static_cast<int>(g_bernoulli.size()) <= n) {
        int m = static_cast<int>(g_bernoulli.size());
        if (m % 2 == 1) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        Rational acc(0);
        Integer binom(1);  // C(m+1, j), starting at j = 0
        for (int j = 0; j < m; ++j) {
            acc += Rational(binom) * g_bernoulli[static_cast<size_t>(j)];
            binom *= (m + 1 - j);
            binom /= (j + 1);
        }
        acc /= Rational(m + 1);
        g_bernoulli.emplace_back(-acc);
    }
}
}  // namespace

const Rational& bernoulli(int n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(n);
    return g_bernoulli[static_cast<size_t>(n)];
}

}  // namespace detail

namespace {

constexpr int kMaxSeriesTerms = 200000;

// Direct defining series, |z| <= 0.6.
Complex li2_series(const Complex& z, const PrecisionContext& ctx) {
    Real eps = pow10(-(ctx.working_digits() + 2), ctx);
    Complex term = z;
    Complex sum = z;
    for (long n = 2; n < kMaxSeriesTerms; ++n) {
        term = term * z;
        sum += term / (n * n);
        if (abs(term) < eps) return sum;
    }
    throw NonConvergence("li2 series did not reach tolerance");
}

// Expansion of Li2(e^mu) about z = 1 in powers of mu = log z, |mu| < 2*pi:
//   Li2(e^mu) = zeta(2) + mu (1 - log(-mu)) - mu^2/4
//             - sum_{m>=1} B_{2m} / (2m (2m+1)!) mu^{2m+1}
Complex li2_log_series(const Complex& z, const PrecisionContext& ctx) {
    Complex mu = log(z);
    Complex sum = Complex(const_zeta2(ctx)) + mu * (1 - log(-mu)) - mu * mu / 4;
    Real eps = pow10(-(ctx.working_digits() + 2), ctx);
    Complex mu2 = mu * mu;
    Complex mupow = mu * mu2;  // mu^{2m+1}
    Integer fact(6);           // (2m+1)!
    for (int m = 1; m < 4000; ++m) {
        Rational coeff = detail::bernoulli(2 * m) / (Rational(2 * m) * Rational(fact));
        Complex term = mupow * Real::of(coeff, ctx);
        sum -= term;
        if (abs(term) < eps) return sum;
        mupow = mupow * mu2;
        fact *= (2 * m + 2);
        fact *= (2 * m + 3);
    }
    throw NonConvergence("li2 log-series did not reach tolerance");
}

// Principal log with an explicit side for exact negative real arguments.
Complex log_side(const Complex& w, int upper, const PrecisionContext& ctx) {
    if (w.im().is_zero() && w.re().sign() < 0) {
        Real im = const_pi(ctx);
        if (upper < 0) im = -im;
        return Complex(log(abs(w.re())), im);
    }
    return log(w);
}

// Real-argument evaluation; `upper` fixes the side of the [1, inf) cut.
Complex li2_real(const Real& x, int upper, const PrecisionContext& ctx) {
    Real zero(ctx.bits());
    if (x.is_zero()) return Complex(zero, zero);
    if (x == 1) return Complex(const_zeta2(ctx), zero);
    if (x == -1) return Complex(-(const_zeta2(ctx) / 2), zero);
    if (x > 0 && x * 5 <= 3) return li2_series(Complex(x), ctx);
    if (x > 0 && x < 1) {
        // Reflection: Li2(x) = pi^2/6 - ln x ln(1-x) - Li2(1-x).
        Real omx = 1 - x;
        Complex tail = li2_series(Complex(omx), ctx);
        return Complex(const_zeta2(ctx) - log(x) * log(omx), zero) - tail;
    }
    if (x > 1) {
        // Li2(x ± i0) = -Li2(1/x) + pi^2/3 - ln^2 x / 2 ± i pi ln x.
        Real lx = log(x);
        Complex base = -li2_real(1 / x, upper, ctx) +
                       Complex(const_zeta2(ctx) * 2 - lx * lx / 2, zero);
        Real im = const_pi(ctx) * lx;
        if (upper < 0) im = -im;
        return base + Complex(zero, im);
    }
    if (x > -1) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, with x/(x-1) in (0, 1/2).
        Real w = x / (x - 1);
        Real l = log(1 - x);
        return -li2_series(Complex(w), ctx) - Complex(l * l / 2, zero);
    }
    // x < -1. Inversion: Li2(x) = -Li2(1/x) - pi^2/6 - ln^2(-x)/2.
    Real l = log(-x);
    return -li2_real(1 / x, upper, ctx) - Complex(const_zeta2(ctx) + l * l / 2, zero);
}

Complex li2_complex(const Complex& z, const PrecisionContext& ctx) {
    Real t = Real::of(Rational(3, 5), ctx);
    Real az = abs(z);
    if (az <= t) return li2_series(z, ctx);
    if (az * t >= 1) {
        // Inversion: Li2(z) = -pi^2/6 - ln^2(-z)/2 - Li2(1/z).
        Complex l = log(-z);
        return -li2_series(1 / z, ctx) - Complex(const_zeta2(ctx)) - l * l / 2;
    }
    Complex omz = 1 - z;
    if (abs(omz) <= t) {
        // Reflection: Li2(z) = pi^2/6 - ln z ln(1-z) - Li2(1-z).
        return Complex(const_zeta2(ctx)) - log(z) * log(omz) - li2_series(omz, ctx);
    }
    Complex w = z / (z - 1);
    if (abs(w) <= t) {
        // Landen: Li2(z) = -ln^2(1-z)/2 - Li2(z/(z-1)).
        Complex l = log(omz);
        return -li2_series(w, ctx) - l * l / 2;
    }
    return li2_log_series(z, ctx);
}

int side_sign(CutSide side) { return side == CutSide::below ? -1 : +1; }

}  // namespace

Complex li2(const Complex& z, CutSide side, const PrecisionContext& ctx) {
    if (!z.is_finite()) throw DomainError("li2: non-finite argument");
    Real re(ctx.bits()), im(ctx.bits());
    mpfr_set(re.raw(), z.re().raw(), MPFR_RNDN);
    mpfr_set(im.raw(), z.im().raw(), MPFR_RNDN);
    if (im.is_zero()) return li2_real(re, side_sign(side), ctx);
    return li2_complex(Complex(re, im), ctx);
}

Complex rogers_L(const Complex& z, CutSide side, const PrecisionContext& ctx) {
    Real zero(ctx.bits());
    if (z.is_zero()) return Complex(zero, zero);
    if (z.im().is_zero() && z.re() == 1) return Complex(const_zeta2(ctx), zero);
    int upper = side_sign(side);
    Complex dilog = li2(z, side, ctx);
    // The side of z fixes the side of 1-z on the opposite half-plane.
    Complex lz = log_side(z, upper, ctx);
    Complex lomz = log_side(1 - z, -upper, ctx);
    return dilog + lz * lomz / 2;
}

}  // namespace ladderlab
