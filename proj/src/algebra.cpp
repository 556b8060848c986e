#include "ladderlab/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ladderlab {

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) {
    return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::parse(const std::string& csv) {
    std::vector<Rational> coeffs;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char ch) { return ch == ' '; }),
                  tok.end());
        if (tok.empty()) throw DomainError("RationalPoly::parse: empty coefficient");
        coeffs.push_back(parse_rational(tok));
    }
    if (coeffs.empty()) throw DomainError("RationalPoly::parse: no coefficients");
    return RationalPoly(std::move(coeffs));
}

Rational RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Real RationalPoly::eval(const Real& x) const {
    PrecisionContext ctx(std::max(10, x.prec_digits() - 10), 10);
    Real acc = Real::of(0, ctx);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real::of(*it, ctx);
    return acc;
}

Complex RationalPoly::eval(const Complex& x) const {
    int digits = std::max(10, static_cast<int>(x.prec_bits() / 3.3219280948873623) - 10);
    PrecisionContext ctx(digits, 10);
    Complex acc = Complex::of(0, ctx);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real::of(*it, ctx);
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly::zero();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den_lcm(1);
    for (const Rational& q : c_) {
        Integer d = q.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    Integer num_gcd(0);
    for (const Rational& q : c_) {
        Integer n = q.get_num() * den_lcm / q.get_den();
        num_gcd = gcd(num_gcd, n);
    }
    if (num_gcd == 0) num_gcd = 1;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (c_.back() * scale < 0) scale = -scale;
    std::vector<Rational> out(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) {
        out[k] = c_[k] * scale;
        out[k].canonicalize();
    }
    return RationalPoly(std::move(out));
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational q = coeff(k);
        if (q == 0) continue;
        std::string mag = Rational(abs(q)).get_str();
        std::string term;
        if (k == 0) {
            term = mag;
        } else {
            term = (mag == "1" ? "" : mag + "*") + var + (k == 1 ? "" : "^" + std::to_string(k));
        }
        if (out.empty())
            out = (q < 0 ? "-" : "") + term;
        else
            out += (q < 0 ? " - " : " + ") + term;
    }
    return out;
}

std::string RationalPoly::csv() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) out += ",";
        out += c_[k].get_str();
    }
    return out;
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
    std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (size_t k = 0; k < p.c_.size(); ++k) out[k] += p.c_[k];
    for (size_t k = 0; k < q.c_.size(); ++k) out[k] += q.c_[k];
    return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& p, const RationalPoly& q) { return p + (-q); }

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> out(c_);
    for (Rational& q : out) q = -q;
    return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) return RationalPoly::zero();
    std::vector<Rational> out(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return RationalPoly(std::move(out));
}

namespace {
RationalPoly power_of(const RationalPoly& p, int n) {
    RationalPoly acc = RationalPoly::constant(1);
    for (int k = 0; k < n; ++k) acc = acc * p;
    return acc;
}
}  // namespace

RationalPoly compose_numerator(const RationalPoly& p, const RationalPoly& num,
                               const RationalPoly& den) {
    if (den.is_zero()) throw DomainError("compose_numerator: zero denominator");
    // N(y) = sum_k c_k num^k den^(deg p - k), by Horner in num with den powers.
    int dp = p.degree();
    if (dp < 0) return RationalPoly::zero();
    RationalPoly acc = RationalPoly::constant(p.coeff(dp));
    for (int k = dp - 1; k >= 0; --k) {
        acc = acc * num + RationalPoly::constant(p.coeff(k)) * power_of(den, dp - k);
    }
    return acc.primitive();
}

// ---------------------------------------------------------------------------
// Root isolation

namespace {

// Polynomial remainder of a by b over Q.
RationalPoly poly_rem(RationalPoly a, const RationalPoly& b) {
    int db = b.degree();
    Rational lead = b.coeff(db);
    while (a.degree() >= db && !a.is_zero()) {
        int k = a.degree() - db;
        Rational f = a.coeff(a.degree()) / lead;
        a = a - RationalPoly::monomial(f, k) * b;
    }
    return a;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
    std::vector<RationalPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RationalPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_changes(const std::vector<RationalPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const RationalPoly& p : chain) {
        Rational v = p.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

void isolate(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi,
             int count, std::vector<std::pair<Rational, Rational>>& out, int depth) {
    if (count == 0) return;
    if (depth > 200) throw NonConvergence("real_roots: isolation recursion too deep");
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    const RationalPoly& p = chain.front();
    if (p.eval(mid) == 0) {
        // Nudge the split point off the root.
        mid = lo + (hi - lo) * Rational(13, 29);
    }
    int vlo = sign_changes(chain, lo);
    int vmid = sign_changes(chain, mid);
    int vhi = sign_changes(chain, hi);
    isolate(chain, lo, mid, vlo - vmid, out, depth + 1);
    isolate(chain, mid, hi, vmid - vhi, out, depth + 1);
}

Real bisect_refine(const RationalPoly& p, const Rational& qlo, const Rational& qhi,
                   const PrecisionContext& ctx) {
    PrecisionContext wide(ctx.digits + 5, ctx.guard);
    Real lo = Real::of(qlo, wide);
    Real hi = Real::of(qhi, wide);
    Real flo = p.eval(lo);
    if (flo.is_zero()) return lo;
    Real fhi = p.eval(hi);
    if (fhi.is_zero()) return hi;
    if (flo.sign() == fhi.sign())
        throw DomainError("bisect_refine: interval does not bracket a sign change");
    Real tol = pow10(-(wide.working_digits()), wide) * max(abs(lo), max(abs(hi), Real::of(1, wide)));
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        Real fm = p.eval(mid);
        if (fm.is_zero()) return mid;
        if (fm.sign() == flo.sign()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace

Real AlgebraicConstant::approx(const PrecisionContext& ctx) const {
    if (closed_form) return closed_form(ctx);
    return bisect_refine(minpoly, lo, hi, ctx);
}

std::vector<AlgebraicConstant> real_roots(const RationalPoly& p, const Rational& lo,
                                          const Rational& hi, const PrecisionContext& ctx) {
    if (p.degree() < 1) return {};
    if (lo >= hi) throw DomainError("real_roots: empty range");
    auto chain = sturm_chain(p);
    // Squarefree on the range: gcd(p, p') has no root there. The last nonzero
    // Sturm element is (up to sign) that gcd; a degree >= 1 tail with a sign
    // change or root in range means a repeated root.
    const RationalPoly& tail = chain.back();
    if (tail.degree() >= 1) {
        auto tail_chain = sturm_chain(tail);
        if (sign_changes(tail_chain, lo) - sign_changes(tail_chain, hi) > 0)
            throw DomainError("real_roots: polynomial not squarefree on range");
    }
    // Endpoints must not be roots for clean Sturm counting.
    Rational a = lo, b = hi;
    while (p.eval(a) == 0) a -= Rational(1, 1000);
    while (p.eval(b) == 0) b += Rational(1, 1000);
    int count = sign_changes(chain, a) - sign_changes(chain, b);
    std::vector<std::pair<Rational, Rational>> intervals;
    isolate(chain, a, b, count, intervals, 0);
    std::vector<AlgebraicConstant> out;
    int idx = 0;
    for (auto& [ilo, ihi] : intervals) {
        AlgebraicConstant c;
        c.id = "root_" + std::to_string(idx++);
        c.minpoly = p;
        c.lo = ilo;
        c.hi = ihi;
        out.push_back(std::move(c));
    }
    // Refinement happens on demand via approx(); pre-refine once here so the
    // returned enclosure is tight and approx() cost is predictable.
    for (AlgebraicConstant& c : out) {
        Real r = bisect_refine(c.minpoly, c.lo, c.hi, ctx);
        (void)r;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constant registry

namespace {

Real half_sec(long num_pi, long den_pi, const PrecisionContext& ctx) {
    Real angle = const_pi(ctx) * num_pi / den_pi;
    return 1 / (cos(angle) * 2);
}

Real two_cos(long num_pi, long den_pi, const PrecisionContext& ctx) {
    Real angle = const_pi(ctx) * num_pi / den_pi;
    return cos(angle) * 2;
}

Real bytsko_closed(int sign, const PrecisionContext& ctx) {
    Real s = sin(const_pi(ctx) / 14);
    Real root = sqrt(1 - s * s * 3);
    return (sign > 0 ? root : -root) - s;
}

std::vector<AlgebraicConstant> build_registry() {
    std::vector<AlgebraicConstant> reg;
    auto add = [&](const std::string& id, const std::string& minpoly_csv, Rational lo,
                   Rational hi, std::function<Real(const PrecisionContext&)> cf) {
        AlgebraicConstant c;
        c.id = id;
        c.minpoly = RationalPoly::parse(minpoly_csv);
        c.lo = std::move(lo);
        c.hi = std::move(hi);
        c.closed_form = std::move(cf);
        reg.push_back(std::move(c));
    };

    // Loxton-Lewin bases.
    add("kappa", "-1,0,3,1", Rational(1, 2), Rational(3, 5),
        [](const PrecisionContext& ctx) { return half_sec(1, 9, ctx); });
    add("lambda", "1,0,-3,1", Rational(3, 5), Rational(7, 10),
        [](const PrecisionContext& ctx) { return half_sec(2, 9, ctx); });
    add("mu", "1,-3,0,1", Rational(1, 4), Rational(2, 5),
        [](const PrecisionContext& ctx) { return two_cos(4, 9, ctx); });

    // Gordon-McIntosh bases (pi/18 trio).
    add("gm_a", "-1,3,6,1", Rational(1, 5), Rational(1, 4), [](const PrecisionContext& ctx) {
        return sqrt(Real::of(3, ctx)) * two_cos(5, 18, ctx) - 2;
    });
    add("gm_b", "1,3,-6,1", Rational(4, 5), Rational(9, 10), [](const PrecisionContext& ctx) {
        return sqrt(Real::of(3, ctx)) * two_cos(11, 18, ctx) + 2;
    });
    add("gm_c", "1,-6,3,1", Rational(1, 10), Rational(1, 5), [](const PrecisionContext& ctx) {
        return sqrt(Real::of(3, ctx)) * two_cos(7, 18, ctx) - 1;
    });

    // Quartic ladder radii and the radius-method roots they come from.
    add("quartic_r", "1,1,-6,1,1", Rational(1, 2), Rational(3, 5),
        [](const PrecisionContext& ctx) {
            Real s33 = sqrt(Real::of(33, ctx));
            return (s33 - 1 - sqrt((9 - s33) * 2)) / 4;
        });
    add("quartic_r2", "1,-1,-6,-1,1", Rational(3, 10), Rational(7, 20),
        [](const PrecisionContext& ctx) {
            Real s33 = sqrt(Real::of(33, ctx));
            return (s33 + 1 - sqrt((9 + s33) * 2)) / 4;
        });
    add("quartic_u1", "16,0,-15,0,3", Rational(6, 5), Rational(13, 10),
        [](const PrecisionContext& ctx) {
            Real s = sqrt(Real::of(Rational(11, 3), ctx));
            return sqrt((5 - s) / 2);
        });
    add("quartic_u2", "16,0,-15,0,3", Rational(9, 5), Rational(19, 10),
        [](const PrecisionContext& ctx) {
            Real s = sqrt(Real::of(Rational(11, 3), ctx));
            return sqrt((5 + s) / 2);
        });

    // Radius-method root of u^3 - 3u^2 + 2u + 1/3 inside the unit circle.
    add("ll_u0", "1,6,-9,3", Rational(-1, 5), Rational(-1, 10), nullptr);

    // Bytsko sextic roots and y = 1/(1 - x1).
    add("bytsko_x0", "-1,2,0,-2,0,1,1", Rational(3, 5), Rational(4, 5),
        [](const PrecisionContext& ctx) { return bytsko_closed(+1, ctx); });
    add("bytsko_x1", "-1,2,0,-2,0,1,1", Rational(-6, 5), Rational(-11, 10),
        [](const PrecisionContext& ctx) { return bytsko_closed(-1, ctx); });
    {
        RationalPoly sextic = RationalPoly::parse("-1,2,0,-2,0,1,1");
        RationalPoly num = RationalPoly::parse("-1,1");  // y - 1
        RationalPoly den = RationalPoly::parse("0,1");   // y
        AlgebraicConstant c;
        c.id = "bytsko_y";
        c.minpoly = compose_numerator(sextic, num, den);
        c.lo = Rational(2, 5);
        c.hi = Rational(1, 2);
        c.closed_form = [](const PrecisionContext& ctx) {
            return 1 / (1 - bytsko_closed(-1, ctx));
        };
        reg.push_back(std::move(c));
    }

    add("watson_u", "1,-2,-1,1", Rational(2, 5), Rational(1, 2),
        [](const PrecisionContext& ctx) { return two_cos(3, 7, ctx); });

    return reg;
}

const std::vector<AlgebraicConstant>& registry() {
    static const std::vector<AlgebraicConstant> reg = build_registry();
    return reg;
}

}  // namespace

const AlgebraicConstant& constant(const std::string& id) {
    for (const AlgebraicConstant& c : registry())
        if (c.id == id) return c;
    throw UnknownId("constant: unknown id '" + id + "'");
}

std::vector<std::string> constant_ids() {
    std::vector<std::string> ids;
    for (const AlgebraicConstant& c : registry()) ids.push_back(c.id);
    return ids;
}

NahmSystem nahm_system(const PrecisionContext& ctx) {
    Real alpha = constant("bytsko_x0").approx(ctx);
    Real beta = (1 - alpha) / (alpha * alpha * alpha);
    return NahmSystem{alpha, beta};
}

// ---------------------------------------------------------------------------
// BivarPoly

void BivarPoly::trim() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second == 0)
            it = t_.erase(it);
        else
            ++it;
    }
}

BivarPoly BivarPoly::term(const Rational& c, int du, int dx) {
    BivarPoly p;
    if (c != 0) p.t_[{du, dx}] = c;
    return p;
}

BivarPoly operator+(const BivarPoly& p, const BivarPoly& q) {
    BivarPoly out = p;
    for (const auto& [key, c] : q.t_) out.t_[key] += c;
    out.trim();
    return out;
}

BivarPoly operator-(const BivarPoly& p, const BivarPoly& q) {
    BivarPoly out = p;
    for (const auto& [key, c] : q.t_) out.t_[key] -= c;
    out.trim();
    return out;
}

BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
    BivarPoly out;
    for (const auto& [ka, ca] : p.t_)
        for (const auto& [kb, cb] : q.t_)
            out.t_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    out.trim();
    return out;
}

bool verify_poly_identity(const BivarPoly& lhs, const BivarPoly& rhs) {
    return (lhs - rhs).is_zero();
}

}  // namespace ladderlab
