// Integer-relation detection (PSLQ with gamma = 2/sqrt(3)) and polylogarithm
// ladder machinery: validating ladder relations against the weight-2 ladder
// definition and re-discovering coefficient vectors from an algebraic base.

#ifndef LADDERLAB_RELATIONS_HPP
#define LADDERLAB_RELATIONS_HPP

#include <map>
#include <optional>
#include <vector>

#include "ladderlab/algebra.hpp"
#include "ladderlab/mpnum.hpp"

namespace ladderlab {

struct RelationResult {
    std::vector<Integer> vec;  // content-reduced, first nonzero entry positive
    Integer norm;              // max |entry|
    Real residual;             // |vec . xs|
};

struct PslqOutcome {
    std::optional<RelationResult> relation;
    Real norm_bound;  // certified lower bound on any relation norm when none found
    long iterations = 0;
};

// Standard PSLQ. Detection threshold 10^-(digits - n); returns none with a
// certified bound once the bound exceeds max_norm. Requires digits >= 15*n.
PslqOutcome pslq(const std::vector<Real>& xs, const PrecisionContext& ctx,
                 const Integer& max_norm, long max_iterations = 0);

// Best continued-fraction convergent p/q with q <= max_den and
// |x - p/q| < 10^-(digits/2), judged at x's own precision.
std::optional<Rational> rational_reconstruct(const Real& x, const Integer& max_den);

// A weight-2 ladder in display form:
//   sum_r coeffs[r] Li2(base^r) + pi2_coeff pi^2 + log2_coeff ln^2(base) = 0.
struct LadderRelation {
    AlgebraicConstant base;
    int weight = 2;
    int index = 0;                  // N, the highest power appearing
    std::map<int, Rational> coeffs;
    Rational pi2_coeff;             // reports also show the zeta(2) slot = 6*pi2_coeff
    Rational log2_coeff;

    Rational zeta2_coeff() const { return pi2_coeff * 6; }
};

// L_2(N, u) = Li2(u^N)/N - sum_{r<N} A_r Li2(u^r)/r - A_0 ln^2(u)/2, with the
// A_r derived from the display coefficients (A_r = -coeffs[r] r / (coeffs[N] N),
// A_0 = -2 log2_coeff / (coeffs[N] N)).
Complex ladder_value(const LadderRelation& l, const PrecisionContext& ctx);

// Display-form residual (should vanish for a valid ladder).
Complex ladder_residual(const LadderRelation& l, const PrecisionContext& ctx);

// PSLQ over [Li2(base^k), k <= max_power] + [zeta(2), ln^2 base]; hits are
// re-validated at doubled precision before being returned.
std::vector<LadderRelation> ladder_search(const AlgebraicConstant& base, int max_power,
                                          const PrecisionContext& ctx, const Integer& max_norm);

}  // namespace ladderlab

#endif
