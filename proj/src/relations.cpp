#include "ladderlab/relations.hpp"

#include <algorithm>

#include "ladderlab/polylog.hpp"

namespace ladderlab {

namespace {

Integer round_to_integer(const Real& x) { return x.round(); }

struct PslqState {
    int n;
    PrecisionContext ctx;
    std::vector<Real> y;                         // 1-indexed below via [i-1]
    std::vector<std::vector<Real>> H;            // n x (n-1)
    std::vector<std::vector<Integer>> A, B;      // n x n

    Real& h(int i, int j) { return H[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
    Real& yy(int i) { return y[static_cast<size_t>(i - 1)]; }
    Integer& a(int i, int j) { return A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
    Integer& b(int i, int j) { return B[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
};

// Size-reduce row i of H against rows j..1, updating y, A, B.
void reduce_row(PslqState& st, int i, int j_start) {
    for (int j = j_start; j >= 1; --j) {
        if (st.h(j, j).is_zero()) continue;
        Integer t = round_to_integer(st.h(i, j) / st.h(j, j));
        if (t == 0) continue;
        Real tr = Real::of(t, st.ctx);
        st.yy(j) += tr * st.yy(i);
        for (int k = 1; k <= j; ++k) st.h(i, k) -= tr * st.h(j, k);
        for (int k = 1; k <= st.n; ++k) {
            st.a(i, k) -= t * st.a(j, k);
            st.b(k, j) += t * st.b(k, i);
        }
    }
}

}  // namespace

PslqOutcome pslq(const std::vector<Real>& xs, const PrecisionContext& ctx,
                 const Integer& max_norm, long max_iterations) {
    int n = static_cast<int>(xs.size());
    if (n < 2) throw DomainError("pslq: need at least two inputs");
    for (const Real& x : xs)
        if (x.is_zero()) throw DomainError("pslq: inputs must be nonzero");
    if (ctx.digits < 15 * n)
        throw PrecisionExhausted("pslq: need at least " + std::to_string(15 * n) +
                                 " digits for " + std::to_string(n) + " inputs");
    if (max_iterations <= 0) max_iterations = 10000L * n;

    PslqState st;
    st.n = n;
    st.ctx = ctx;
    st.y.resize(static_cast<size_t>(n));
    st.H.assign(static_cast<size_t>(n), std::vector<Real>(static_cast<size_t>(n - 1)));
    st.A.assign(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n)));
    st.B.assign(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n)));

    // Partial norms s_k = sqrt(sum_{j>=k} x_j^2).
    std::vector<Real> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Real xi = Real::of(0, ctx);
        mpfr_set(xi.raw(), xs[static_cast<size_t>(i)].raw(), MPFR_RNDN);
        x[static_cast<size_t>(i)] = xi;
    }
    std::vector<Real> s(static_cast<size_t>(n + 1));
    Real acc = Real::of(0, ctx);
    for (int k = n; k >= 1; --k) {
        acc += x[static_cast<size_t>(k - 1)] * x[static_cast<size_t>(k - 1)];
        s[static_cast<size_t>(k)] = sqrt(acc);
    }
    Real s1 = s[1];
    for (int i = 1; i <= n; ++i) st.yy(i) = x[static_cast<size_t>(i - 1)] / s1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < n; ++j) st.h(i, j) = Real::of(0, ctx);
    for (int i = 1; i < n; ++i)
        st.h(i, i) = s[static_cast<size_t>(i + 1)] / s[static_cast<size_t>(i)];
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            st.h(i, j) = -(st.yy(i) * st.yy(j) * s1 * s1) /
                         (s[static_cast<size_t>(j)] * s[static_cast<size_t>(j + 1)]);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            st.a(i, j) = (i == j) ? 1 : 0;
            st.b(i, j) = (i == j) ? 1 : 0;
        }
    for (int i = 2; i <= n; ++i) reduce_row(st, i, i - 1);

    Real gamma = 2 / sqrt(Real::of(3, ctx));
    Real detect = pow10(-(ctx.digits - n), ctx);

    PslqOutcome out;
    out.norm_bound = Real::of(1, ctx);

    auto finish_relation = [&](int j) -> std::optional<RelationResult> {
        std::vector<Integer> vec(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) vec[static_cast<size_t>(i - 1)] = st.b(i, j);
        Integer g(0);
        for (const Integer& v : vec) g = gcd(g, v);
        if (g == 0) return std::nullopt;
        for (Integer& v : vec) v /= g;
        for (const Integer& v : vec) {
            if (v != 0) {
                if (v < 0)
                    for (Integer& w : vec) w = -w;
                break;
            }
        }
        Real resid = Real::of(0, ctx);
        for (int i = 0; i < n; ++i)
            resid += Real::of(vec[static_cast<size_t>(i)], ctx) * x[static_cast<size_t>(i)];
        RelationResult rr;
        rr.vec = vec;
        rr.norm = 0;
        for (const Integer& v : vec) rr.norm = std::max(rr.norm, Integer(abs(v)));
        rr.residual = abs(resid);
        return rr;
    };

    for (long iter = 1; iter <= max_iterations; ++iter) {
        ++out.iterations;
        // Pick m maximizing gamma^i |H_ii|.
        int m = 1;
        Real bestv = Real::of(-1, ctx);
        Real gpow = Real::of(1, ctx);
        for (int i = 1; i < n; ++i) {
            gpow *= gamma;
            Real v = gpow * abs(st.h(i, i));
            if (v > bestv) {
                bestv = v;
                m = i;
            }
        }
        std::swap(st.y[static_cast<size_t>(m - 1)], st.y[static_cast<size_t>(m)]);
        std::swap(st.H[static_cast<size_t>(m - 1)], st.H[static_cast<size_t>(m)]);
        std::swap(st.A[static_cast<size_t>(m - 1)], st.A[static_cast<size_t>(m)]);
        for (int k = 1; k <= n; ++k)
            std::swap(st.b(k, m), st.b(k, m + 1));

        if (m <= n - 2) {
            Real t0 = hypot(st.h(m, m), st.h(m, m + 1));
            if (!t0.is_zero()) {
                Real c = st.h(m, m) / t0;
                Real d = st.h(m, m + 1) / t0;
                for (int i = m; i <= n; ++i) {
                    Real a0 = st.h(i, m);
                    Real b0 = st.h(i, m + 1);
                    st.h(i, m) = a0 * c + b0 * d;
                    st.h(i, m + 1) = b0 * c - a0 * d;
                }
            }
        }
        for (int i = m + 1; i <= n; ++i) reduce_row(st, i, std::min(i - 1, m + 1));

        // Detection.
        int jmin = 1;
        Real ymin = abs(st.yy(1));
        for (int i = 2; i <= n; ++i) {
            Real ai = abs(st.yy(i));
            if (ai < ymin) {
                ymin = ai;
                jmin = i;
            }
        }
        Real resid_scale = ymin * s1;
        if (resid_scale < detect) {
            auto rel = finish_relation(jmin);
            if (rel && rel->norm <= max_norm) {
                out.relation = std::move(rel);
                return out;
            }
        }

        // Norm lower bound: 1 / max |H_ii|.
        Real hmax = Real::of(0, ctx);
        for (int i = 1; i < n; ++i) hmax = max(hmax, abs(st.h(i, i)));
        if (hmax.is_zero()) throw PrecisionExhausted("pslq: H degenerated");
        out.norm_bound = 1 / hmax;
        if (out.norm_bound > Real::of(max_norm, ctx)) return out;  // none up to max_norm
    }
    throw PrecisionExhausted("pslq: iteration cap reached without a decision");
}

std::optional<Rational> rational_reconstruct(const Real& x, const Integer& max_den) {
    int digits = x.prec_digits();
    PrecisionContext ctx(std::max(10, digits - 5), 5);
    Real tol = pow10(-(digits / 2), ctx);
    Real exact_tol = pow10(-(digits - 8), ctx);

    // Continued fraction convergents p_k/q_k.
    Integer p_prev(1), q_prev(0);
    Integer a0 = floor(x).round();
    Integer p_cur = a0, q_cur = 1;
    Real frac = x - Real::of(a0, ctx);
    std::optional<Rational> best;
    for (int k = 0; k < 256; ++k) {
        if (q_cur <= max_den) {
            Rational cand(p_cur, q_cur);
            cand.canonicalize();
            Real err = abs(x - Real::of(cand, ctx));
            if (err < tol && (!best || abs(x - Real::of(*best, ctx)) > err)) best = cand;
            if (err < exact_tol) break;
        } else {
            break;
        }
        if (frac.is_zero()) break;
        Real inv = 1 / frac;
        Integer a = floor(inv).round();
        frac = inv - Real::of(a, ctx);
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return best;
}

namespace {

int ladder_index(const LadderRelation& l) {
    int n = 0;
    for (const auto& [r, c] : l.coeffs)
        if (c != 0) n = std::max(n, r);
    return n;
}

}  // namespace

Complex ladder_value(const LadderRelation& l, const PrecisionContext& ctx) {
    Real u = l.base.approx(ctx);
    Complex cu(u);
    int N = ladder_index(l);
    if (N == 0) throw DomainError("ladder_value: empty coefficient map");
    Rational lead = l.coeffs.count(N) ? l.coeffs.at(N) : Rational(0);
    if (lead == 0) throw DomainError("ladder_value: zero leading coefficient");
    Rational scale = lead * N;
    Complex value = li2(pow(cu, N), ctx) / N;
    for (const auto& [r, c] : l.coeffs) {
        if (r == N || c == 0) continue;
        Rational ar = -c * r / scale;  // A_r
        value -= li2(pow(cu, r), ctx) * Real::of(ar, ctx) / r;
    }
    if (u.sign() <= 0) throw DomainError("ladder_value: base must be positive");
    Rational a0 = Rational(-2) * l.log2_coeff / scale;
    Real lu = log(u);
    value -= Complex(Real::of(a0, ctx) * lu * lu / 2);
    return value;
}

Complex ladder_residual(const LadderRelation& l, const PrecisionContext& ctx) {
    Real u = l.base.approx(ctx);
    Complex cu(u);
    Complex value = Complex::of(0, ctx);
    for (const auto& [r, c] : l.coeffs) {
        if (c == 0) continue;
        value += li2(pow(cu, r), ctx) * Real::of(c, ctx);
    }
    Real pi = const_pi(ctx);
    value += Complex(Real::of(l.pi2_coeff, ctx) * pi * pi);
    if (u.sign() <= 0) throw DomainError("ladder_residual: base must be positive");
    Real lu = log(u);
    value += Complex(Real::of(l.log2_coeff, ctx) * lu * lu);
    return value;
}

std::vector<LadderRelation> ladder_search(const AlgebraicConstant& base, int max_power,
                                          const PrecisionContext& ctx, const Integer& max_norm) {
    if (max_power < 1) throw DomainError("ladder_search: max_power must be >= 1");
    int n = max_power + 2;
    if (ctx.digits < 15 * n)
        throw PrecisionExhausted("ladder_search: need at least " + std::to_string(15 * n) +
                                 " digits for max_power " + std::to_string(max_power));
    Real u = base.approx(ctx);
    if (u.sign() <= 0 || u >= 1)
        throw DomainError("ladder_search: base must lie in (0, 1)");

    std::vector<Real> xs;
    Complex cu(u);
    for (int k = 1; k <= max_power; ++k) xs.push_back(li2(pow(cu, k), ctx).re());
    xs.push_back(const_zeta2(ctx));
    Real lu = log(u);
    xs.push_back(lu * lu);

    PslqOutcome outcome = pslq(xs, ctx, max_norm);
    std::vector<LadderRelation> found;
    if (!outcome.relation) return found;

    const std::vector<Integer>& v = outcome.relation->vec;
    LadderRelation l;
    l.base = base;
    l.weight = 2;
    for (int k = 1; k <= max_power; ++k) {
        Rational c(v[static_cast<size_t>(k - 1)]);
        if (c != 0) l.coeffs[k] = c;
    }
    l.pi2_coeff = Rational(v[static_cast<size_t>(max_power)]) / 6;  // zeta(2) slot
    l.log2_coeff = Rational(v[static_cast<size_t>(max_power + 1)]);
    l.index = ladder_index(l);
    if (l.coeffs.empty()) return found;

    // Re-validate at doubled precision: a true relation's residual collapses
    // with the extra digits; a spurious one stays at the old detection scale.
    PrecisionContext ctx2(ctx.digits * 2, ctx.guard);
    Real resid2 = abs(ladder_residual(l, ctx2));
    Real gate = pow10(-(ctx.digits * 3 / 2), ctx2);
    if (resid2 < gate) found.push_back(std::move(l));
    return found;
}

}  // namespace ladderlab
