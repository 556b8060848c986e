// ladderlab: batch verification, evaluation, quadrature and ladder-search CLI.
//
// Commands: verify, verify-all, search, eval, integrate.
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 numeric
// non-convergence / precision exhaustion.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladderlab/algebra.hpp"
#include "ladderlab/hyperseries.hpp"
#include "ladderlab/identities.hpp"
#include "ladderlab/polylog.hpp"
#include "ladderlab/quadrature.hpp"
#include "ladderlab/relations.hpp"

using nlohmann::json;
using namespace ladderlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct RunConfig {
    int digits = 100;
    int tol_exp = 0;  // 0 -> per-case default (digits - 10 for zero-type)
    long max_den = 1000000;
    std::string max_norm = "10000000000";
    bool json_out = false;
};

int env_default_digits() {
    if (const char* v = std::getenv("LADDERLAB_DIGITS")) {
        int d = std::atoi(v);
        if (d >= 10) return d;
    }
    return 100;
}

// Parses "re", "re+imi", "re-imi", "p/q", "1+1i".
Complex parse_complex(const std::string& text, const PrecisionContext& ctx) {
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw DomainError("empty numeric argument");
    auto parse_real = [&](const std::string& t) -> Real {
        if (t.find('/') != std::string::npos) {
            Rational q;
            if (q.set_str(t, 10) != 0) throw DomainError("bad rational '" + t + "'");
            q.canonicalize();
            return Real::of(q, ctx);
        }
        return Real::parse(t, ctx);
    };
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // Split the imaginary part off at the last +/- that is not an exponent
        // sign and not the leading sign.
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            char ch = body[k];
            if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos)
            return Complex(Real::of(0, ctx), body.empty() ? Real::of(1, ctx) : parse_real(body));
        std::string re_part = body.substr(0, split);
        std::string im_part = body.substr(split);
        if (im_part == "+" || im_part == "-") im_part += "1";
        return Complex(parse_real(re_part), parse_real(im_part));
    }
    return Complex(parse_real(s), Real::of(0, ctx));
}

json report_json(const VerificationReport& r) {
    json j;
    j["identity_id"] = r.id;
    j["params"] = r.params;
    j["digits"] = r.digits;
    j["residual_abs"] = r.residual_abs.str(3);
    j["residual_im_abs"] = r.residual_im_abs.str(3);
    if (r.pi2_coeff) {
        j["pi2_coeff"] = {{"num", r.pi2_coeff->get_num().get_str()},
                          {"den", r.pi2_coeff->get_den().get_str()}};
    } else {
        j["pi2_coeff"] = nullptr;
    }
    j["status"] = r.pass ? "pass" : "fail";
    // Timing is suppressed in JSON so identical runs emit identical bytes.
    j["elapsed_ms"] = 0;
    return j;
}

void print_report_text(const VerificationReport& r) {
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id;
    if (!r.params.empty()) std::cout << " [" << r.params << "]";
    std::cout << "  residual=" << r.residual_abs.str(3)
              << "  im=" << r.residual_im_abs.str(3);
    if (r.pi2_coeff)
        std::cout << "  pi2=" << r.pi2_coeff->get_num().get_str() << "/"
                  << r.pi2_coeff->get_den().get_str();
    std::cout << "  (" << r.digits << " digits, " << r.elapsed_ms << " ms)\n";
}

int emit_reports(const std::vector<VerificationReport>& reports, bool json_out) {
    bool all_pass = true;
    json arr = json::array();
    for (const VerificationReport& r : reports) {
        all_pass = all_pass && r.pass;
        if (json_out)
            arr.push_back(report_json(r));
        else
            print_report_text(r);
    }
    if (json_out) std::cout << arr.dump(2) << "\n";
    return all_pass ? kExitPass : kExitFail;
}

std::string normalize_id(std::string id) {
    for (char& ch : id)
        if (ch == '-') ch = '_';
    if (id == "thm1") return "thm1_chain";
    if (id == "thm2") return "thm2_six_term";
    if (id == "thm3") return "thm3_three_term";
    return id;
}

int cmd_verify(const std::string& raw_id, const std::vector<std::string>& param_flags,
               const RunConfig& cfg) {
    if (cfg.tol_exp >= cfg.digits)
        throw DomainError("--tol-exp must be smaller than --digits");
    PrecisionContext ctx(cfg.digits);
    std::string id = normalize_id(raw_id);
    std::vector<VerificationReport> reports;
    if (id == "all") {
        // Fan the cases out across a bounded worker pool; report order stays
        // registry order regardless of completion order.
        std::vector<std::string> ids = identity_ids();
        std::vector<std::vector<VerificationReport>> slots(ids.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t k = next.fetch_add(1); k < ids.size(); k = next.fetch_add(1))
                slots[k] = verify_defaults(ids[k], ctx, cfg.tol_exp, Integer(cfg.max_den));
        };
        unsigned n_workers = std::min<unsigned>(
            std::max(1u, std::thread::hardware_concurrency()), 8u);
        std::vector<std::thread> pool;
        try {
            for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
        } catch (const std::system_error&) {
            // Thread creation failed: finish on the main thread alone.
        }
        worker();
        for (std::thread& t : pool) t.join();
        for (auto& slot : slots)
            for (VerificationReport& r : slot) reports.push_back(std::move(r));
    } else {
        identity_case(id);  // throws UnknownId before any work
        if (param_flags.empty()) {
            reports = verify_defaults(id, ctx, cfg.tol_exp, Integer(cfg.max_den));
        } else {
            ParamSet params;
            for (const std::string& spec : param_flags) {
                size_t eq = spec.find('=');
                if (eq == std::string::npos) throw DomainError("bad --set '" + spec + "'");
                params.emplace(spec.substr(0, eq), parse_complex(spec.substr(eq + 1), ctx));
            }
            reports.push_back(verify(id, params, ctx, cfg.tol_exp, Integer(cfg.max_den)));
        }
    }
    return emit_reports(reports, cfg.json_out);
}

int cmd_search(const std::string& minpoly_csv, const std::string& interval, int max_power,
               const RunConfig& cfg, bool digits_explicit) {
    RationalPoly p = RationalPoly::parse(minpoly_csv);
    size_t comma = interval.find(',');
    if (comma == std::string::npos) throw DomainError("--root-interval expects lo,hi");
    Rational lo = parse_rational(interval.substr(0, comma));
    Rational hi = parse_rational(interval.substr(comma + 1));

    int needed = 15 * (max_power + 2);
    int digits = cfg.digits;
    if (!digits_explicit && digits < needed + 20) digits = needed + 20;
    PrecisionContext ctx(digits);

    auto roots = real_roots(p, lo, hi, ctx);
    if (roots.size() != 1) {
        std::cerr << "error: interval (" << lo.get_str() << ", " << hi.get_str()
                  << ") isolates " << roots.size() << " roots, need exactly 1\n";
        return kExitUsage;
    }
    AlgebraicConstant base = roots.front();
    base.id = "search_base";

    auto ladders = ladder_search(base, max_power, ctx, Integer(cfg.max_norm));
    PrecisionContext ctx2(ctx.digits * 2, ctx.guard);

    json out;
    out["minpoly"] = p.str("x");
    out["base"] = base.approx(ctx).str(30);
    out["digits"] = digits;
    out["relations"] = json::array();
    for (const LadderRelation& l : ladders) {
        json jl;
        jl["index"] = l.index;
        json coeffs = json::object();
        for (const auto& [r, c] : l.coeffs) coeffs[std::to_string(r)] = c.get_str();
        jl["li2_coeffs"] = coeffs;
        jl["zeta2_coeff"] = l.zeta2_coeff().get_str();
        jl["pi2_coeff"] = l.pi2_coeff.get_str();
        jl["log2_coeff"] = l.log2_coeff.get_str();
        jl["residual"] = abs(ladder_residual(l, ctx)).str(3);
        jl["residual_2x"] = abs(ladder_residual(l, ctx2)).str(3);
        out["relations"].push_back(jl);
    }
    if (cfg.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "base " << out["base"].get<std::string>() << " (root of "
                  << out["minpoly"].get<std::string>() << ")\n";
        if (ladders.empty()) std::cout << "no relation found within the norm bound\n";
        auto signed_term = [](const Rational& c, const std::string& sym, bool first) {
            std::string mag = Rational(abs(c)).get_str();
            std::string sign = c < 0 ? "- " : (first ? "" : "+ ");
            return sign + (mag == "1" ? "" : mag + " ") + sym + " ";
        };
        for (const LadderRelation& l : ladders) {
            std::cout << "relation: ";
            bool first = true;
            for (const auto& [r, c] : l.coeffs) {
                std::cout << signed_term(c, "Li2(u^" + std::to_string(r) + ")", first);
                first = false;
            }
            if (l.zeta2_coeff() != 0) std::cout << signed_term(l.zeta2_coeff(), "zeta(2)", false);
            if (l.log2_coeff != 0) std::cout << signed_term(l.log2_coeff, "ln^2(u)", false);
            std::cout << "= 0\n";
            std::cout << "residual " << abs(ladder_residual(l, ctx)).str(3) << ", at 2x digits "
                      << abs(ladder_residual(l, ctx2)).str(3) << "\n";
        }
    }
    return kExitPass;
}

int cmd_eval(const std::string& fn, const std::string& arg_text, const std::string& side_text,
             const RunConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    Complex arg = parse_complex(arg_text, ctx);
    CutSide side = CutSide::principal;
    if (side_text == "above")
        side = CutSide::above;
    else if (side_text == "below")
        side = CutSide::below;
    else if (!side_text.empty() && side_text != "principal")
        throw DomainError("--side must be above, below or principal");

    Complex value;
    if (fn == "li2")
        value = li2(arg, side, ctx);
    else if (fn == "rogersL" || fn == "L")
        value = rogers_L(arg, side, ctx);
    else if (fn == "s1")
        value = named_series(SeriesId::s1, arg, ctx);
    else if (fn == "s2")
        value = named_series(SeriesId::s2, arg, ctx);
    else if (fn == "s3")
        value = named_series(SeriesId::s3, arg, ctx);
    else if (fn == "cubic")
        value = named_series(SeriesId::cubic, arg, ctx);
    else
        throw UnknownId("eval: unknown --fn '" + fn + "'");

    if (cfg.json_out) {
        json j;
        j["fn"] = fn;
        j["arg"] = arg.str(cfg.digits);
        j["digits"] = cfg.digits;
        j["value"] = value.str(cfg.digits);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value.str(cfg.digits) << "\n";
    }
    return kExitPass;
}

int cmd_integrate(const std::string& name, const std::string& param_text, const RunConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    Complex param = parse_complex(param_text, ctx);
    NamedIntegral id;
    std::string n = normalize_id(name);
    if (n == "w1_arctan")
        id = NamedIntegral::w1_arctan;
    else if (n == "w1_log")
        id = NamedIntegral::w1_log;
    else if (n == "w2_arctan")
        id = NamedIntegral::w2_arctan;
    else if (n == "w2_log")
        id = NamedIntegral::w2_log;
    else if (n == "cubic_w1")
        id = NamedIntegral::cubic_w1;
    else if (n == "cubic_w2")
        id = NamedIntegral::cubic_w2;
    else if (n == "s2_lhs")
        id = NamedIntegral::s2_lhs;
    else if (n == "thm1_integral")
        id = NamedIntegral::thm1_integral;
    else
        throw UnknownId("integrate: unknown --name '" + name + "'");

    QuadResult q = named_integral(id, param, ctx);
    if (cfg.json_out) {
        json j;
        j["name"] = n;
        j["param"] = param.str(cfg.digits);
        j["digits"] = cfg.digits;
        j["value"] = q.value.str(cfg.digits);
        j["err_estimate"] = q.err_estimate.str(3);
        j["levels_used"] = q.levels_used;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << q.value.str(cfg.digits) << "  (err ~ " << q.err_estimate.str(3)
                  << ", levels " << q.levels_used << ")\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ladderlab: dilogarithm identity verification and ladder search"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.digits = env_default_digits();

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "working precision in decimal digits");
        sub->add_option("--tol-exp", cfg.tol_exp, "pass threshold 10^-tol_exp");
        sub->add_option("--max-den", cfg.max_den, "denominator bound for reconstruction");
        sub->add_option("--max-norm", cfg.max_norm, "norm bound for relation search");
        sub->add_flag("--json", cfg.json_out, "emit JSON reports");
    };

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify one identity at its defaults");
    std::string verify_id;
    std::vector<std::string> set_params;
    std::string u_flag, x_flag, y_flag, r_flag, z_flag, param_flag;
    verify_cmd->add_option("id", verify_id, "identity id")->required();
    verify_cmd->add_option("--set", set_params, "explicit parameter name=value");
    verify_cmd->add_option("--u", u_flag, "parameter u");
    verify_cmd->add_option("--x", x_flag, "parameter x");
    verify_cmd->add_option("--y", y_flag, "parameter y");
    verify_cmd->add_option("--z", z_flag, "parameter z");
    verify_cmd->add_option("--r", r_flag, "parameter r");
    verify_cmd->add_option("--param", param_flag, "single unnamed parameter (maps to u)");
    add_common(verify_cmd);

    // verify-all
    auto* verify_all_cmd = app.add_subcommand("verify-all", "verify the whole registry");
    add_common(verify_all_cmd);

    // search
    auto* search_cmd = app.add_subcommand("search", "PSLQ ladder search from an algebraic base");
    std::string minpoly_csv, root_interval;
    int max_power = 6;
    search_cmd->add_option("--minpoly", minpoly_csv, "ascending rational coefficients")
        ->required();
    search_cmd->add_option("--root-interval", root_interval, "lo,hi isolating one real root")
        ->required();
    search_cmd->add_option("--max-power", max_power, "highest Li2 power in the basis");
    add_common(search_cmd);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a registered function");
    std::string eval_fn, eval_arg, eval_side;
    eval_cmd->add_option("--fn", eval_fn, "li2 | rogersL | s1 | s2 | s3 | cubic")->required();
    eval_cmd->add_option("--arg", eval_arg, "argument (re, re+imi, or p/q)")->required();
    eval_cmd->add_option("--side", eval_side, "above | below | principal");
    add_common(eval_cmd);

    // integrate
    auto* integrate_cmd = app.add_subcommand("integrate", "evaluate a named integral");
    std::string int_name, int_param;
    integrate_cmd->add_option("--name", int_name, "named integral id")->required();
    integrate_cmd->add_option("--param", int_param, "integral parameter")->required();
    add_common(integrate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            std::vector<std::string> params = set_params;
            if (!u_flag.empty()) params.push_back("u=" + u_flag);
            if (!x_flag.empty()) params.push_back("x=" + x_flag);
            if (!y_flag.empty()) params.push_back("y=" + y_flag);
            if (!z_flag.empty()) params.push_back("z=" + z_flag);
            if (!r_flag.empty()) params.push_back("r=" + r_flag);
            if (!param_flag.empty()) params.push_back("u=" + param_flag);
            return cmd_verify(verify_id, params, cfg);
        }
        if (verify_all_cmd->parsed()) return cmd_verify("all", {}, cfg);
        if (search_cmd->parsed())
            return cmd_search(minpoly_csv, root_interval, max_power, cfg,
                              search_cmd->count("--digits") > 0);
        if (eval_cmd->parsed()) return cmd_eval(eval_fn, eval_arg, eval_side, cfg);
        if (integrate_cmd->parsed()) return cmd_integrate(int_name, int_param, cfg);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UnknownId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterOutOfRegion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonConvergence& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DivergentSeries& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
