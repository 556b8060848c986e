// Complex dilogarithm with full analytic continuation and the Rogers
// L-function L(x) = Li2(x) + (1/2) ln x ln(1-x).
//
// Li2 carries its principal cut on [1, inf). CutSide selects the limit from
// Im z -> 0+ or 0- for real arguments on a cut; `principal` is the upper-side
// limit, matching the mpnum branch convention.

#ifndef LADDERLAB_POLYLOG_HPP
#define LADDERLAB_POLYLOG_HPP

#include "ladderlab/mpnum.hpp"

namespace ladderlab {

enum class CutSide { above, below, principal };

Complex li2(const Complex& z, CutSide side, const PrecisionContext& ctx);
Complex rogers_L(const Complex& z, CutSide side, const PrecisionContext& ctx);

// Convenience overloads defaulting to the principal side.
inline Complex li2(const Complex& z, const PrecisionContext& ctx) {
    return li2(z, CutSide::principal, ctx);
}
inline Complex rogers_L(const Complex& z, const PrecisionContext& ctx) {
    return rogers_L(z, CutSide::principal, ctx);
}

namespace detail {
// Exact Bernoulli numbers B_0..B_n (odd indices > 1 are zero). Cached.
const Rational& bernoulli(int n);
}  // namespace detail

}  // namespace ladderlab

#endif
