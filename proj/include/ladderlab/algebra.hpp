// Exact polynomial arithmetic over Q, rational-function composition, real
// root isolation (Sturm + bisection), and the registry of named algebraic
// constants used by the identity and ladder machinery.

#ifndef LADDERLAB_ALGEBRA_HPP
#define LADDERLAB_ALGEBRA_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ladderlab/mpnum.hpp"

namespace ladderlab {

class RationalPoly {
  public:
    RationalPoly() = default;
    // Coefficients in ascending degree; trailing zeros are trimmed.
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(const Rational& c, int degree);
    // "1/3,2,-3,1" (ascending) -> u^3 - 3u^2 + 2u + 1/3.
    static RationalPoly parse(const std::string& csv);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;

    Rational eval(const Rational& x) const;
    Real eval(const Real& x) const;
    Complex eval(const Complex& x) const;
    RationalPoly derivative() const;

    // Primitive integer form: integer coefficients, content 1, positive lead.
    RationalPoly primitive() const;
    std::string str(const std::string& var = "x") const;
    std::string csv() const;

    friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator-(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator*(const RationalPoly& p, const RationalPoly& q);
    RationalPoly operator-() const;
    friend bool operator==(const RationalPoly& p, const RationalPoly& q) { return p.c_ == q.c_; }

  private:
    std::vector<Rational> c_;
    void trim();
};

// Numerator of p(n/d) after clearing d^deg(p), content-normalized.
RationalPoly compose_numerator(const RationalPoly& p, const RationalPoly& num,
                               const RationalPoly& den);

struct AlgebraicConstant {
    std::string id;
    RationalPoly minpoly;
    Rational lo, hi;  // isolating interval, contains exactly one real root
    // Optional closed trigonometric / radical form; empty -> refine by bisection.
    std::function<Real(const PrecisionContext&)> closed_form;

    Real approx(const PrecisionContext& ctx) const;
};

// Real roots of p inside (lo, hi), refined to ctx precision. Requires p
// squarefree on the range.
std::vector<AlgebraicConstant> real_roots(const RationalPoly& p, const Rational& lo,
                                          const Rational& hi, const PrecisionContext& ctx);

// Registered constants: kappa, lambda, mu, gm_a, gm_b, gm_c, quartic_r,
// quartic_r2, quartic_u1, quartic_u2, ll_u0, bytsko_x0, bytsko_x1, bytsko_y,
// watson_u.
const AlgebraicConstant& constant(const std::string& id);
std::vector<std::string> constant_ids();

struct NahmSystem {
    Real alpha, beta;
};

// alpha = bytsko_x0, beta = (1 - alpha)/alpha^3.
NahmSystem nahm_system(const PrecisionContext& ctx);

// Sparse bivariate polynomial over Q in (u, x), for exact identity checks.
class BivarPoly {
  public:
    BivarPoly() = default;
    static BivarPoly term(const Rational& c, int du, int dx);
    static BivarPoly var_u() { return term(1, 1, 0); }
    static BivarPoly var_x() { return term(1, 0, 1); }
    static BivarPoly constant(const Rational& c) { return term(c, 0, 0); }

    friend BivarPoly operator+(const BivarPoly& p, const BivarPoly& q);
    friend BivarPoly operator-(const BivarPoly& p, const BivarPoly& q);
    friend BivarPoly operator*(const BivarPoly& p, const BivarPoly& q);
    friend bool operator==(const BivarPoly& p, const BivarPoly& q) { return p.t_ == q.t_; }
    bool is_zero() const { return t_.empty(); }

  private:
    std::map<std::pair<int, int>, Rational> t_;
    void trim();
};

// Exact bivariate expansion equality.
bool verify_poly_identity(const BivarPoly& lhs, const BivarPoly& rhs);

}  // namespace ladderlab

#endif
