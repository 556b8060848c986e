// Adaptive tanh-sinh quadrature tolerant of endpoint log/algebraic
// singularities, plus the named integrals behind the w-chain and the sextic
// closed-form residual check.
//
// Integrands receive the node x together with its exact distances to both
// interval endpoints, so singular factors like ln(x - a) or (b - x)^(-1/2)
// can be evaluated without cancellation.

#ifndef LADDERLAB_QUADRATURE_HPP
#define LADDERLAB_QUADRATURE_HPP

#include <functional>

#include "ladderlab/mpnum.hpp"

namespace ladderlab {

struct QuadResult {
    Complex value;
    Real err_estimate;
    int levels_used = 0;
};

using Integrand =
    std::function<Complex(const Real& x, const Real& from_a, const Real& from_b)>;

QuadResult integrate(const Integrand& f, const Real& a, const Real& b,
                     const PrecisionContext& ctx, int max_levels = 12);

enum class NamedIntegral {
    w1_arctan,
    w1_log,
    w2_arctan,
    w2_log,
    cubic_w1,
    cubic_w2,
    s2_lhs,
    thm1_integral,
};

QuadResult named_integral(NamedIntegral id, const Complex& param, const PrecisionContext& ctx);

enum class SexticKernel { arctan_type, arcsin_type };

struct SexticSpec {
    Rational a, b, c, d;
    Complex h;
    Real y;  // in (0, 1)
    SexticKernel kernel = SexticKernel::arctan_type;
};

// |quadrature over g in [0, h] - closed form|.
Real sextic_closed_form_check(const SexticSpec& spec, const PrecisionContext& ctx);

// x^q for positive real x, rational q (exp/log route).
Real pow_rat(const Real& x, const Rational& q);

}  // namespace ladderlab

#endif
