// Pochhammer-quotient ("bracket") power series and the named series s1, s2,
// s3 and the cubic series. A bracket series sums
//   sum_n ratio_base^n * arg^(arg_power * n) * prod (num_i)_n / prod (den_i)_n
// with exact rational term-ratio bookkeeping.

#ifndef LADDERLAB_HYPERSERIES_HPP
#define LADDERLAB_HYPERSERIES_HPP

#include <vector>

#include "ladderlab/mpnum.hpp"

namespace ladderlab {

struct BracketSeries {
    std::vector<Rational> num_params;
    std::vector<Rational> den_params;
    Rational ratio_base;
    int arg_power = 1;
};

struct ConvergenceVerdict {
    bool converges = false;
    Real ratio_limit;
};

struct SeriesEvalInfo {
    long terms = 0;
    bool slow = false;  // term ratio within 1e-3 of divergence
};

ConvergenceVerdict converges(const BracketSeries& s, const Complex& arg);
Complex eval_bracket(const BracketSeries& s, const Complex& arg, const PrecisionContext& ctx,
                     SeriesEvalInfo* info = nullptr);

enum class SeriesId { s1, s2, s3, cubic };

// s1(h), s2(g), s3(u), cubic(z), prefactors included.
Complex named_series(SeriesId id, const Complex& arg, const PrecisionContext& ctx);

// The raw bracket behind a named series, and the bracket-level argument the
// named argument maps to (identity except s3, whose bracket runs in u(u^2-1)).
BracketSeries named_bracket(SeriesId id);
Complex named_bracket_arg(SeriesId id, const Complex& arg);

}  // namespace ladderlab

#endif
