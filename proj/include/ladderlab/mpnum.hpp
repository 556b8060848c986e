// Arbitrary-precision real/complex arithmetic over MPFR with principal-branch
// elementary functions. Branch convention is principal everywhere; values on a
// cut take the limit from the upper half-plane (Im ln(-x) = +pi for x > 0).

#ifndef LADDERLAB_MPNUM_HPP
#define LADDERLAB_MPNUM_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "ladderlab/errors.hpp"

namespace ladderlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Working precision in decimal digits plus guard digits. All internal
// computation runs at digits+guard; results are trusted to digits.
struct PrecisionContext {
    int digits = 100;
    int guard = 10;

    PrecisionContext() = default;
    explicit PrecisionContext(int d, int g = 10) : digits(d), guard(g) {
        if (d < 10) throw DomainError("PrecisionContext: digits must be >= 10");
        if (g < 0) throw DomainError("PrecisionContext: guard must be >= 0");
    }

    int working_digits() const { return digits + guard; }

    // Binary precision covering working_digits decimal digits, small headroom.
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(working_digits() * 3.3219280948873623 + 16);
    }
};

class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long v, const PrecisionContext& ctx) {
        Real r(ctx.bits());
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& q, const PrecisionContext& ctx) {
        Real r(ctx.bits());
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Integer& z, const PrecisionContext& ctx) {
        Real r(ctx.bits());
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    // Parses a decimal literal ("-2.46", "1e-30").
    static Real parse(const std::string& s, const PrecisionContext& ctx);

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    // Decimal digits this value's precision supports (floor).
    int prec_digits() const { return static_cast<int>(prec_bits() / 3.3219280948873623); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Nearest integer as an exact bignum.
    Integer round() const;
    // Decimal string with n significant digits, plain format ("-0.00123", "17.25").
    std::string str(int n) const;

    // Raw handle for the few call sites that need mpfr directly.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real operator-() const {
        Real r(prec_bits());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) {
        if (b.is_zero()) throw DomainError("Real division by zero");
        return bin(mpfr_div, a, b);
    }
    friend Real operator+(const Real& a, long b) { return bin_si(mpfr_add_si, a, b); }
    friend Real operator-(const Real& a, long b) { return bin_si(mpfr_sub_si, a, b); }
    friend Real operator*(const Real& a, long b) { return bin_si(mpfr_mul_si, a, b); }
    friend Real operator/(const Real& a, long b) {
        if (b == 0) throw DomainError("Real division by zero");
        return bin_si(mpfr_div_si, a, b);
    }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec_bits());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        if (b.is_zero()) throw DomainError("Real division by zero");
        Real r(b.prec_bits());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  private:
    using MpfrBin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using MpfrBinSi = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);
    static Real bin(MpfrBin fn, const Real& a, const Real& b) {
        Real r(std::max(a.prec_bits(), b.prec_bits()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real bin_si(MpfrBinSi fn, const Real& a, long b) {
        Real r(a.prec_bits());
        fn(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);   // requires x >= 0
Real log(const Real& x);    // requires x > 0
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real asin(const Real& x);   // requires |x| <= 1
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);

Real const_pi(const PrecisionContext& ctx);
Real const_ln2(const PrecisionContext& ctx);
Real const_zeta2(const PrecisionContext& ctx);  // pi^2/6, computed from pi

// 10^e at ctx precision; the standard tolerance builder.
Real pow10(long e, const PrecisionContext& ctx);

// Exact rational from "p/q", an integer, or a decimal literal ("0.37").
Rational parse_rational(const std::string& text);

class Complex {
  public:
    Complex() = default;
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    // Real embeds with an exact zero imaginary part at matching precision.
    explicit Complex(const Real& re) : re_(re), im_(Real(re.prec_bits())) {}

    static Complex of(long re, const PrecisionContext& ctx) {
        return Complex(Real::of(re, ctx), Real::of(0, ctx));
    }
    static Complex of(const Rational& re, const PrecisionContext& ctx) {
        return Complex(Real::of(re, ctx), Real::of(0, ctx));
    }
    static Complex i(const PrecisionContext& ctx) {
        return Complex(Real::of(0, ctx), Real::of(1, ctx));
    }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    mpfr_prec_t prec_bits() const { return std::max(re_.prec_bits(), im_.prec_bits()); }

    std::string str(int n) const;

    Complex operator-() const { return Complex(-re_, -im_); }
    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    friend Complex operator+(const Complex& a, const Real& b) { return Complex(a.re_ + b, a.im_); }
    friend Complex operator-(const Complex& a, const Real& b) { return Complex(a.re_ - b, a.im_); }
    friend Complex operator*(const Complex& a, const Real& b) { return Complex(a.re_ * b, a.im_ * b); }
    friend Complex operator/(const Complex& a, const Real& b) { return Complex(a.re_ / b, a.im_ / b); }
    friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
    friend Complex operator+(const Real& a, const Complex& b) { return b + a; }
    friend Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re_, -b.im_); }
    friend Complex operator+(const Complex& a, long b) { return Complex(a.re_ + b, a.im_); }
    friend Complex operator-(const Complex& a, long b) { return Complex(a.re_ - b, a.im_); }
    friend Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }
    friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }
    friend Complex operator-(long a, const Complex& b) { return Complex(a - b.re_, -b.im_); }
    friend Complex operator+(long a, const Complex& b) { return b + a; }
    friend Complex operator*(long a, const Complex& b) { return b * a; }
    friend Complex operator/(long a, const Complex& b);
    Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    Real re_, im_;
};

Real abs(const Complex& z);
// Principal argument in (-pi, pi]; exact-zero imaginary parts count as +0.
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
Complex log(const Complex& z);  // throws DomainError on z == 0
Complex exp(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex atan(const Complex& z);
Complex asin(const Complex& z);
Complex pow(const Complex& z, long n);
Complex pow(const Complex& z, const Complex& w);
Complex sqr(const Complex& z);

enum class ElemFn { ln, sqrt, exp, atan, asin, sin, cos, pow };
enum class ConstId { pi, zeta2, ln2 };

// Contract-level entry points: evaluate at ctx precision regardless of the
// argument's own precision metadata.
Complex elem(ElemFn fn, const Complex& z, const PrecisionContext& ctx);
Complex elem_pow(const Complex& z, const Complex& w, const PrecisionContext& ctx);
Real constant(ConstId id, const PrecisionContext& ctx);

}  // namespace ladderlab

#endif
