// The identity registry: every verified dilogarithm identity as a
// closed-form residual evaluator with branch-aware comparison and rational
// reconstruction of pi^2 multiples.
//
// Branch policy: everything is evaluated with principal branches. For cases
// whose terms land on cuts (arguments > 1 or < 0), the pi^2-rational claims
// are judged on real parts, with the imaginary residual reported separately.

#ifndef LADDERLAB_IDENTITIES_HPP
#define LADDERLAB_IDENTITIES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/mpnum.hpp"

namespace ladderlab {

using ParamSet = std::map<std::string, Complex>;
// Exact (re, im) parameter values, materialized at the verification context.
using RationalParams = std::map<std::string, std::pair<Rational, Rational>>;

enum class Expected { zero, pi2_rational, pi2_rational_unknown };

struct IdentityCase {
    std::string id;
    Expected expected = Expected::zero;
    std::optional<Rational> expected_pi2;  // known rational for pi2_rational cases
    std::string param_doc;                 // human-readable parameter region
    std::vector<RationalParams> defaults;  // documented default parameter sets
    // Default pass exponent as a function of the context (zero-type: digits-10;
    // pi2-type: digits/2 - 5; finite-difference cases looser).
    std::function<int(const PrecisionContext&)> default_tol_exp;
    std::function<Complex(const ParamSet&, const PrecisionContext&)> eval;
};

ParamSet materialize(const RationalParams& params, const PrecisionContext& ctx);

struct VerificationReport {
    std::string id;
    std::string params;
    int digits = 0;
    Real residual_abs;
    Real residual_im_abs;
    std::optional<Rational> pi2_coeff;
    bool pass = false;
    long elapsed_ms = 0;
};

// Terms of the main six-part functional equation chain, all at a common u
// with principal branches.
struct Theorem1Terms {
    Complex A, B, J, C, H, D, K, M;
};

Theorem1Terms theorem1_terms(const Complex& u, const PrecisionContext& ctx);
Complex theorem1_s3(const Complex& u, const PrecisionContext& ctx);

const std::vector<IdentityCase>& identity_registry();
const IdentityCase& identity_case(const std::string& id);
std::vector<std::string> identity_ids();

// Raw residual (LHS - RHS) under principal branches; for pi2-rational cases
// the expression value itself, before any rational pi^2 term is removed.
Complex residual(const std::string& id, const ParamSet& params, const PrecisionContext& ctx);

// Continued-fraction reconstruction of Re(value)/pi^2 with denominator bound.
std::optional<Rational> reconstruct_pi2(const Complex& value, const Integer& max_den,
                                        const PrecisionContext& ctx);

// tol_exp <= 0 selects the case's default policy.
VerificationReport verify(const std::string& id, const ParamSet& params,
                          const PrecisionContext& ctx, int tol_exp = 0,
                          const Integer& max_den = Integer(1000000));

// Runs every documented default parameter set; for pi2-rational cases also
// enforces that the reconstructed rational agrees across the sets.
std::vector<VerificationReport> verify_defaults(const std::string& id,
                                                const PrecisionContext& ctx, int tol_exp = 0,
                                                const Integer& max_den = Integer(1000000));

std::string render_params(const ParamSet& params);

}  // namespace ladderlab

#endif
