#include "ladderlab/mpnum.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace ladderlab {

Real Real::parse(const std::string& s, const PrecisionContext& ctx) {
    Real r(ctx.bits());
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("Real::parse: bad decimal literal '" + s + "'");
    return r;
}

Integer Real::round() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_round(t, v_);
    Integer z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ);
    mpfr_clear(t);
    return z;
}

std::string Real::str(int n) const {
    if (n < 2) n = 2;
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(n), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits.erase(0, 1);
    }
    // digits = d1 d2 ... dn, value = 0.d1d2... * 10^e
    std::string out;
    if (e > 0 && e <= n) {
        out = digits.substr(0, static_cast<size_t>(e));
        std::string frac = digits.substr(static_cast<size_t>(e));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (e <= 0 && e > -6) {
        std::string frac = digits;
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out = "0." + std::string(static_cast<size_t>(-e), '0') + frac;
    } else {
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = digits.substr(0, 1);
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e - 1);
    }
    return neg ? "-" + out : out;
}

namespace {

Real un(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x) {
    Real r(x.prec_bits());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

Real abs(const Real& x) { return un(mpfr_abs, x); }
Real exp(const Real& x) {
    Real r = un(mpfr_exp, x);
    if (!r.is_finite()) throw DomainError("exp overflow");
    return r;
}
Real sin(const Real& x) { return un(mpfr_sin, x); }
Real cos(const Real& x) { return un(mpfr_cos, x); }
Real atan(const Real& x) { return un(mpfr_atan, x); }

Real floor(const Real& x) {
    Real r(x.prec_bits());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw DomainError("Real sqrt of negative value");
    return un(mpfr_sqrt, x);
}

Real log(const Real& x) {
    if (x.sign() <= 0) throw DomainError("Real log requires a positive argument");
    return un(mpfr_log, x);
}

Real asin(const Real& x) {
    if (abs(x) > 1) throw DomainError("Real asin requires |x| <= 1");
    return un(mpfr_asin, x);
}

Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec_bits(), x.prec_bits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.prec_bits(), y.prec_bits()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n) {
    Real r(x.prec_bits());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    if (!r.is_finite()) throw DomainError("Real pow overflow");
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real const_pi(const PrecisionContext& ctx) {
    Real r(ctx.bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_ln2(const PrecisionContext& ctx) {
    Real r(ctx.bits());
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real const_zeta2(const PrecisionContext& ctx) {
    Real pi = const_pi(ctx);
    return pi * pi / 6;
}

Real pow10(long e, const PrecisionContext& ctx) {
    Real r(ctx.bits());
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw DomainError("parse_rational: empty string");
    size_t dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw DomainError("parse_rational: mixed decimal and fraction '" + text + "'");
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw DomainError("parse_rational: bad literal '" + text + "'");
        Integer num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw DomainError("parse_rational: bad literal '" + text + "'");
        Integer den(1);
        for (size_t k = 0; k < frac_len; ++k) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("parse_rational: bad literal '" + text + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Complex

std::string Complex::str(int n) const {
    if (im_.is_zero()) return re_.str(n);
    std::string im_part = im_.str(n);
    if (!im_part.empty() && im_part[0] == '-') return re_.str(n) + im_part + "i";
    return re_.str(n) + "+" + im_part + "i";
}

Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_zero()) throw DomainError("Complex division by zero");
    // Smith's algorithm keeps intermediate magnitudes tame.
    if (abs(b.re()) >= abs(b.im())) {
        Real t = b.im() / b.re();
        Real d = b.re() + b.im() * t;
        return Complex((a.re() + a.im() * t) / d, (a.im() - a.re() * t) / d);
    }
    Real t = b.re() / b.im();
    Real d = b.re() * t + b.im();
    return Complex((a.re() * t + a.im()) / d, (a.im() * t - a.re()) / d);
}

Complex operator/(long a, const Complex& b) {
    Real ar(b.prec_bits());
    mpfr_set_si(ar.raw(), a, MPFR_RNDN);
    return Complex(ar, Real(b.prec_bits())) / b;
}

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real arg(const Complex& z) {
    if (z.is_zero()) throw DomainError("arg(0) undefined");
    // Normalize an exact-zero imaginary part to +0 so the negative real axis
    // reports +pi (upper-side cut rule).
    if (z.im().is_zero()) {
        Real plus_zero(z.im().prec_bits());
        return atan2(plus_zero, z.re());
    }
    return atan2(z.im(), z.re());
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Complex sqr(const Complex& z) { return z * z; }

Complex sqrt(const Complex& z) {
    if (z.is_zero()) return z;
    Real m = abs(z);
    if (z.re().sign() >= 0) {
        Real t = sqrt((m + z.re()) / 2);
        return Complex(t, z.im() / (t * 2));
    }
    Real s = sqrt((m - z.re()) / 2);
    // im == 0 falls on the cut: take the upper side (+i sqrt|z|).
    int im_sign = z.im().is_zero() ? 1 : z.im().sign();
    Real re_part = abs(z.im()) / (s * 2);
    return im_sign >= 0 ? Complex(re_part, s) : Complex(re_part, -s);
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw DomainError("log(0) undefined");
    if (z.im().is_zero() && z.re().sign() > 0) {
        return Complex(log(z.re()), Real(z.re().prec_bits()));
    }
    return Complex(log(abs(z)), arg(z));
}

Complex exp(const Complex& z) {
    if (z.im().is_zero()) return Complex(exp(z.re()), Real(z.re().prec_bits()));
    Real e = exp(z.re());
    return Complex(e * cos(z.im()), e * sin(z.im()));
}

Complex sin(const Complex& z) {
    if (z.im().is_zero()) return Complex(sin(z.re()), Real(z.re().prec_bits()));
    mpfr_prec_t p = z.prec_bits();
    Real sh(p), ch(p);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(sin(z.re()) * ch, cos(z.re()) * sh);
}

Complex cos(const Complex& z) {
    if (z.im().is_zero()) return Complex(cos(z.re()), Real(z.re().prec_bits()));
    mpfr_prec_t p = z.prec_bits();
    Real sh(p), ch(p);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(cos(z.re()) * ch, -(sin(z.re()) * sh));
}

Complex atan(const Complex& z) {
    if (z.im().is_zero()) return Complex(atan(z.re()), Real(z.re().prec_bits()));
    // atan z = (i/2) (log(1-iz) - log(1+iz)), principal cuts on (±i, ±i∞).
    Complex iz(-z.im(), z.re());
    Complex d = log(1 - iz) - log(1 + iz);
    return Complex(-d.im() / 2, d.re() / 2);
}

Complex asin(const Complex& z) {
    if (z.im().is_zero() && abs(z.re()) <= 1)
        return Complex(asin(z.re()), Real(z.re().prec_bits()));
    // asin z = -i log(iz + sqrt(1-z^2)).
    Complex iz(-z.im(), z.re());
    Complex w = log(iz + sqrt(1 - z * z));
    return Complex(w.im(), -w.re());
}

Complex pow(const Complex& z, long n) {
    mpfr_prec_t p = z.prec_bits();
    Real one(p);
    mpfr_set_si(one.raw(), 1, MPFR_RNDN);
    Complex acc(one, Real(p));
    if (n == 0) return acc;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Complex base = z;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    if (n < 0) return 1 / acc;
    return acc;
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.is_zero()) {
        if (w.is_zero()) throw DomainError("pow(0, 0) undefined");
        if (w.re().sign() <= 0) throw DomainError("pow(0, w) with Re w <= 0");
        return Complex(Real(z.prec_bits()), Real(z.prec_bits()));
    }
    return exp(w * log(z));
}

// ---------------------------------------------------------------------------
// Contract entry points

namespace {

Complex at_ctx(const Complex& z, const PrecisionContext& ctx) {
    Real re(ctx.bits()), im(ctx.bits());
    mpfr_set(re.raw(), z.re().raw(), MPFR_RNDN);
    mpfr_set(im.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(re, im);
}

}  // namespace

Complex elem(ElemFn fn, const Complex& z, const PrecisionContext& ctx) {
    if (!z.is_finite()) throw DomainError("elem: non-finite argument");
    Complex x = at_ctx(z, ctx);
    switch (fn) {
        case ElemFn::ln: return log(x);
        case ElemFn::sqrt: return sqrt(x);
        case ElemFn::exp: return exp(x);
        case ElemFn::atan: return atan(x);
        case ElemFn::asin: return asin(x);
        case ElemFn::sin: return sin(x);
        case ElemFn::cos: return cos(x);
        case ElemFn::pow: throw DomainError("elem: pow needs two arguments, use elem_pow");
    }
    throw DomainError("elem: unknown function id");
}

Complex elem_pow(const Complex& z, const Complex& w, const PrecisionContext& ctx) {
    if (!z.is_finite() || !w.is_finite()) throw DomainError("elem_pow: non-finite argument");
    return pow(at_ctx(z, ctx), at_ctx(w, ctx));
}

Real constant(ConstId id, const PrecisionContext& ctx) {
    switch (id) {
        case ConstId::pi: return const_pi(ctx);
        case ConstId::zeta2: return const_zeta2(ctx);
        case ConstId::ln2: return const_ln2(ctx);
    }
    throw UnknownId("constant: unknown id");
}

}  // namespace ladderlab
