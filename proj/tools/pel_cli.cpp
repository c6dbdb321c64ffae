// pel: exact generalized Euler numbers, fermionic p-adic integrals and the
// p-adic Euler L-function, with a machine-checkable proposition suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error,
// 4 non-convergence / precision exhaustion.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numeric>

#include "pel/json_io.hpp"
#include "pel/lfunction.hpp"
#include "pel/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoConvergence = 4;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "quad:f" | "f:i" | "omega^k" (omega = omega^1)
pel::DirichletCharacter parse_char_spec(const std::string& spec, long p) {
    if (spec.rfind("quad:", 0) == 0) {
        try {
            return pel::quadratic_character(std::stol(spec.substr(5)));
        } catch (const std::invalid_argument&) {
            throw usage_error("bad character spec '" + spec + "'");
        }
    }
    if (spec == "omega")
        return pel::teichmuller_character(p, 1);
    if (spec.rfind("omega^", 0) == 0) {
        try {
            return pel::teichmuller_character(p, std::stol(spec.substr(6)));
        } catch (const std::invalid_argument&) {
            throw usage_error("bad character spec '" + spec + "'");
        }
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw usage_error("bad character spec '" + spec +
                          "' (use quad:f, f:i or omega^k)");
    long f, idx;
    try {
        f = std::stol(spec.substr(0, colon));
        idx = std::stol(spec.substr(colon + 1));
    } catch (const std::invalid_argument&) {
        throw usage_error("bad character spec '" + spec + "'");
    }
    auto chars = pel::characters_mod(f);
    if (idx < 0 || idx >= static_cast<long>(chars.size()))
        throw usage_error("character index " + std::to_string(idx) +
                          " out of range for modulus " + std::to_string(f) +
                          " (have " + std::to_string(chars.size()) + ")");
    return chars[idx];
}

// Minimal integrand DSL: a polynomial in x ("x^7", "3*x^2 + 1/2*x - 4"),
// optionally prefixed by a character twist "chi(x)*x^k" (k may be negative).
struct ParsedIntegrand {
    bool twisted = false;
    long power = 0;             // twisted power
    pel::RationalPolynomial poly; // polynomial form
};

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

ParsedIntegrand parse_integrand(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.empty())
        throw usage_error("empty integrand");
    ParsedIntegrand out;

    if (s.rfind("chi(x)", 0) == 0) {
        out.twisted = true;
        s = s.substr(6);
        if (!s.empty() && s[0] == '*')
            s = s.substr(1);
        if (s.empty()) {
            out.power = 0;
            return out;
        }
        if (s == "x") {
            out.power = 1;
            return out;
        }
        if (s.rfind("x^", 0) == 0) {
            try {
                out.power = std::stol(s.substr(2));
            } catch (const std::invalid_argument&) {
                throw usage_error("bad twisted power in integrand '" + raw + "'");
            }
            return out;
        }
        throw usage_error("twisted integrand must be chi(x)*x^k");
    }

    // polynomial: signed terms coef, coef*x^k, x^k, x
    std::vector<pel::Rational> coeffs;
    auto bump = [&](long deg, const pel::Rational& c) {
        if (deg < 0)
            throw usage_error("negative powers need the chi(x)*x^k form");
        if (coeffs.size() <= static_cast<size_t>(deg))
            coeffs.resize(deg + 1, pel::Rational(0));
        coeffs[deg] += c;
    };
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            // a '-' inside "x^-2" belongs to the exponent
            if (s[j] == '^' && j + 1 < s.size() && s[j + 1] == '-')
                j += 2;
            else
                ++j;
        }
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty())
            throw usage_error("malformed integrand '" + raw + "'");
        pel::Rational coef(sign);
        long deg = 0;
        auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            coef *= pel::parse_rational(term);
        } else {
            std::string head = term.substr(0, xpos);
            if (!head.empty()) {
                if (head.back() == '*')
                    head.pop_back();
                if (!head.empty())
                    coef *= pel::parse_rational(head);
            }
            std::string tail = term.substr(xpos + 1);
            if (tail.empty()) {
                deg = 1;
            } else if (tail[0] == '^') {
                try {
                    deg = std::stol(tail.substr(1));
                } catch (const std::invalid_argument&) {
                    throw usage_error("bad exponent in term '" + term + "'");
                }
            } else {
                throw usage_error("malformed term '" + term + "'");
            }
        }
        bump(deg, coef);
    }
    out.poly = pel::RationalPolynomial(std::move(coeffs));
    return out;
}

void emit_table(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it.value().is_object() || it.value().is_array())
                emit_table(it.value(), key, os);
            else if (it.value().is_string())
                os << key << ": " << it.value().get<std::string>() << "\n";
            else
                os << key << ": " << it.value().dump() << "\n";
        }
    } else if (j.is_array()) {
        long idx = 0;
        for (const auto& el : j)
            emit_table(el, prefix + "[" + std::to_string(idx++) + "]", os);
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "table")
        emit_table(j, "", std::cout);
    else
        std::cout << j.dump() << "\n";
}

pel::PadicContext make_ctx(long p, int precision, int guard) {
    if (guard >= 0)
        return pel::PadicContext(p, precision, guard);
    return pel::make_context(p, precision);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pel: p-adic Euler L-functions, generalized Euler numbers and "
                 "fermionic p-adic integrals, verified against the propositions "
                 "they satisfy"};
    app.require_subcommand(1);
    app.fallthrough(false);

    long p = 5;
    int precision = 6;
    int guard = -1;
    std::string format = "json";
    std::string char_spec;

    auto add_common = [&](CLI::App* sub, bool with_char) {
        sub->add_option("--p", p, "odd prime p")->capture_default_str();
        sub->add_option("--precision", precision, "target precision M (digits mod p^M)")
            ->capture_default_str();
        sub->add_option("--guard", guard,
                        "guard digits override (-1 = automatic policy)");
        sub->add_option("--format", format, "output format: json | table")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        if (with_char)
            sub->add_option("--char", char_spec,
                            "character spec: quad:f | f:i | omega^k")
                ->required();
    };

    // euler
    auto* cmd_euler = app.add_subcommand("euler", "Euler number E_n or polynomial value E_n(x)");
    long euler_n = 0;
    std::string euler_x;
    bool euler_poly_out = false;
    cmd_euler->add_option("--n", euler_n, "index n")->required();
    cmd_euler->add_option("--x", euler_x, "evaluate E_n(x) at this rational");
    cmd_euler->add_flag("--poly", euler_poly_out, "emit the polynomial E_n(x) itself");
    cmd_euler->add_option("--format", format, "output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));

    // gen-euler
    auto* cmd_gen = app.add_subcommand("gen-euler", "generalized Euler number E_{n,chi}");
    long gen_n = 0, gen_span = 0;
    cmd_gen->add_option("--n", gen_n, "index n")->required();
    cmd_gen->add_option("--N", gen_span, "odd multiple of the modulus (default lcm(p,f))");
    add_common(cmd_gen, true);

    // ferint
    auto* cmd_fer = app.add_subcommand("ferint", "fermionic p-adic integral I_{-1}(f)");
    std::string integrand, shift_str = "0";
    bool units = false, force_limit = false;
    int level_cap = 0;
    cmd_fer->add_option("--integrand", integrand,
                        "polynomial in x, or chi(x)*x^k with --char")
        ->required();
    cmd_fer->add_option("--shift", shift_str, "shift x in chi(y)(x+y)^k")
        ->capture_default_str();
    cmd_fer->add_flag("--units", units, "integrate over the unit group Z_p^x");
    cmd_fer->add_flag("--force-limit", force_limit,
                      "use the partial-sum route even when a closed form exists");
    cmd_fer->add_option("--cap", level_cap, "stabilization level cap");
    cmd_fer->add_option("--p", p, "odd prime p")->capture_default_str();
    cmd_fer->add_option("--precision", precision, "target precision M")
        ->capture_default_str();
    cmd_fer->add_option("--guard", guard, "guard digits override");
    cmd_fer->add_option("--format", format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd_fer->add_option("--char", char_spec, "character for twisted integrands");

    // zeta
    auto* cmd_zeta = app.add_subcommand(
        "zeta", "p-adic Hurwitz-type Euler zeta at x in CZ_p, or zeta_{p,E}(s)");
    std::string zeta_s, zeta_x;
    cmd_zeta->add_option("--s", zeta_s, "s (rational, must lie in Z_p)")->required();
    cmd_zeta->add_option("--x", zeta_x, "point a/m with p|m, p∤a; omit for zeta_{p,E}(s)");
    add_common(cmd_zeta, false);

    // lp-eval
    auto* cmd_lp = app.add_subcommand("lp-eval", "L_{p,E}(chi, s) via the CZ_p series");
    std::string lp_s;
    cmd_lp->add_option("--s", lp_s, "s (rational, must lie in Z_p)")->required();
    add_common(cmd_lp, true);

    // lp-interp-check
    auto* cmd_interp = app.add_subcommand(
        "lp-interp-check", "dual-route check L(chi,1-k) vs (1-p^k chi_k(p))E_{k,chi_k}");
    long kmax = 6;
    cmd_interp->add_option("--kmax", kmax, "check k = 1..kmax")->capture_default_str();
    add_common(cmd_interp, true);

    // chi-euler
    auto* cmd_chi = app.add_subcommand("chi-euler", "p-adic chi-Euler number E_{k,p,chi}");
    long chi_k = 0;
    int limit_trace = 0;
    cmd_chi->add_option("--k", chi_k, "index k (any sign)")->required();
    cmd_chi->add_option("--limit-trace", limit_trace,
                        "also emit E_{Phi(p^r)+k,chi} for r = 1..R");
    add_common(cmd_chi, true);

    // h-sum
    auto* cmd_h = app.add_subcommand("h-sum", "H_n = sum'_{a<m} chi(a)(-1)^a a^{-n}");
    long h_n = 1;
    cmd_h->add_option("--n", h_n, "n >= 1")->required();
    add_common(cmd_h, true);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the proposition suites");
    bool verify_all = false, timings = false;
    std::vector<std::string> suites;
    cmd_verify->add_flag("--all", verify_all, "run every suite");
    cmd_verify->add_option("--suite", suites, "suite ids (comma separated ok)")
        ->delimiter(',');
    cmd_verify->add_flag("--timings", timings, "include per-item timings");
    add_common(cmd_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_euler->parsed()) {
            json out;
            out["n"] = euler_n;
            if (euler_poly_out) {
                out["value"] = pel::to_json(pel::euler_polynomial(static_cast<int>(euler_n)));
            } else if (euler_x.empty()) {
                out["value"] = pel::to_string(pel::euler_number(static_cast<int>(euler_n)));
            } else {
                pel::Rational x = pel::parse_rational(euler_x);
                out["x"] = pel::to_string(x);
                out["value"] = pel::to_string(
                    pel::euler_polynomial(static_cast<int>(euler_n))(x));
            }
            emit(out, format);
            return 0;
        }

        if (cmd_gen->parsed()) {
            pel::DirichletCharacter chi = parse_char_spec(char_spec, p);
            pel::PadicContext ctx = make_ctx(p, precision, guard); // validates p
            long span = gen_span > 0 ? gen_span : pel::default_span(chi, ctx.p);
            auto v = pel::gen_euler_number(chi, gen_n, span);
            json out;
            out["char"] = pel::to_json(chi);
            out["n"] = gen_n;
            out["N"] = span;
            out["value"] = pel::to_json(v.value);
            emit(out, format);
            return 0;
        }

        if (cmd_fer->parsed()) {
            pel::PadicContext ctx = make_ctx(p, precision, guard);
            ParsedIntegrand pi = parse_integrand(integrand);
            pel::IntegrandSpec spec = pi.twisted
                ? pel::IntegrandSpec::twisted_power(
                      char_spec.empty() ? pel::DirichletCharacter::trivial()
                                        : parse_char_spec(char_spec, p),
                      pi.power, pel::parse_rational(shift_str))
                : pel::IntegrandSpec::polynomial(pi.poly);
            pel::IntegrationResult r =
                force_limit
                    ? (units ? pel::integrate_units_limit(spec, ctx, level_cap)
                             : pel::integrate_zp_limit(spec, ctx, level_cap))
                    : (units ? pel::integrate_units(spec, ctx)
                             : pel::integrate_zp(spec, ctx));
            json out;
            out["integrand"] = strip_spaces(integrand);
            out["p"] = p;
            out["route"] = r.route;
            out["value"] = pel::to_json(r.value);
            if (!r.trace.empty())
                out["trace"] = pel::trace_to_json(r.trace);
            emit(out, format);
            return 0;
        }

        if (cmd_zeta->parsed()) {
            pel::PadicContext ctx = make_ctx(p, precision, guard);
            pel::PadicNumber s =
                pel::PadicNumber::from_rational(pel::parse_rational(zeta_s), ctx);
            json out;
            out["s"] = zeta_s;
            pel::PadicNumber v = pel::PadicNumber::zero(ctx);
            if (zeta_x.empty()) {
                v = pel::zeta_p_euler(s, ctx);
                out["route"] = "series";
                out["note"] = "zeta_{p,E}(s) = L_{p,E}(chi_0,s), identically 0";
            } else {
                pel::Rational x = pel::parse_rational(zeta_x);
                pel::CZpPoint pt(pel::Integer(x.get_num()),
                                 static_cast<long>(x.get_den().get_si()), p);
                v = pel::hurwitz_euler_zeta(s, pt, ctx);
                out["x"] = pel::to_string(x);
                out["route"] = "series";
            }
            out["value"] = pel::to_json(v);
            emit(out, format);
            return 0;
        }

        if (cmd_lp->parsed()) {
            pel::PadicContext ctx = make_ctx(p, precision, guard);
            pel::DirichletCharacter chi = parse_char_spec(char_spec, p);
            pel::PadicNumber s =
                pel::PadicNumber::from_rational(pel::parse_rational(lp_s), ctx);
            pel::PadicNumber v = pel::lp_eval(chi, s, ctx);
            json out;
            out["char"] = pel::to_json(chi);
            out["p"] = p;
            out["route"] = "series";
            out["s"] = lp_s;
            out["value"] = pel::to_json(v);
            emit(out, format);
            return 0;
        }

        if (cmd_interp->parsed()) {
            pel::PadicContext ctx = make_ctx(p, precision, guard);
            pel::DirichletCharacter chi = parse_char_spec(char_spec, p);
            json rows = json::array();
            bool all_ok = true;
            for (long k = 1; k <= kmax; ++k) {
                pel::PadicNumber series = pel::lp_eval(
                    chi, pel::PadicNumber::from_integer(1 - k, ctx), ctx);
                pel::PadicNumber closed = pel::lp_neg_closed(chi, k, ctx);
                bool ok = (series - closed).is_zero_mod(precision - 1);
                all_ok = all_ok && ok;
                rows.push_back(json{{"k", k},
                                    {"series", pel::to_json(series)},
                                    {"closed", pel::to_json(closed)},
                                    {"status", ok ? "pass" : "fail"}});
            }
            json out;
            out["char"] = pel::to_json(chi);
            out["checks"] = rows;
            out["modulus"] = "p^" + std::to_string(precision - 1);
            out["passed"] = all_ok;
            emit(out, format);
            return all_ok ? 0 : kExitVerifyFail;
        }

        if (cmd_chi->parsed()) {
            pel::PadicContext ctx = make_ctx(p, precision, guard);
            pel::DirichletCharacter chi = parse_char_spec(char_spec, p);
            pel::PadicNumber v = pel::chi_euler_number(chi_k, chi, ctx);
            json out;
            out["char"] = pel::to_json(chi);
            out["k"] = chi_k;
            out["p"] = p;
            out["route"] = chi_k >= 1 ? "closed" : "series";
            out["value"] = pel::to_json(v);
            if (limit_trace > 0) {
                json tr = json::array();
                auto vals = pel::chi_euler_limit_trace(chi_k, chi, limit_trace, ctx);
                for (size_t r = 0; r < vals.size(); ++r)
                    tr.push_back(json{{"r", r + 1}, {"value", pel::to_json(vals[r])}});
                out["trace"] = tr;
                out["route"] = out["route"].get<std::string>() + "+limit";
            }
            emit(out, format);
            return 0;
        }

        if (cmd_h->parsed()) {
            pel::PadicContext ctx = make_ctx(p, precision, guard);
            pel::DirichletCharacter chi = parse_char_spec(char_spec, p);
            pel::PadicNumber v = pel::h_sum(h_n, chi, ctx);
            json out;
            out["char"] = pel::to_json(chi);
            out["n"] = h_n;
            out["p"] = p;
            out["route"] = "closed";
            out["value"] = pel::to_json(v);
            emit(out, format);
            return 0;
        }

        if (cmd_verify->parsed()) {
            std::vector<std::string> ids = suites;
            if (verify_all)
                ids = pel::known_suites();
            if (ids.empty())
                throw usage_error("verify: give --all or --suite");
            for (const auto& id : ids)
                if (!pel::is_known_suite(id))
                    throw usage_error("unknown suite id '" + id + "'");
            pel::VerifyReport report = pel::run_verification(ids, p, precision);
            if (format == "table") {
                for (const auto& it : report.items) {
                    std::cout << "[" << it.status << "] " << it.id << " " << it.params;
                    if (timings)
                        std::cout << " (" << it.elapsed_ms << " ms)";
                    std::cout << "\n";
                    if (it.status == "fail") {
                        std::cout << "    lhs: " << it.lhs << "\n";
                        std::cout << "    rhs: " << it.rhs << "\n";
                    }
                }
                std::cout << (report.all_passed() ? "ALL PASS" : "FAILURES: ")
                          << (report.all_passed() ? "" : std::to_string(report.failures()))
                          << " (" << report.items.size() << " items)\n";
            } else {
                json items = json::array();
                for (const auto& it : report.items) {
                    json ji{{"id", it.id},
                            {"params", it.params},
                            {"status", it.status}};
                    if (it.status == "fail") {
                        ji["lhs"] = it.lhs;
                        ji["rhs"] = it.rhs;
                    }
                    if (timings)
                        ji["elapsed_ms"] = it.elapsed_ms;
                    items.push_back(std::move(ji));
                }
                json out;
                out["items"] = std::move(items);
                out["p"] = p;
                out["passed"] = report.all_passed();
                out["precision"] = precision;
                emit(out, format);
            }
            return report.all_passed() ? 0 : kExitVerifyFail;
        }

        throw usage_error("no subcommand");
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pel::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const pel::convergence_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const pel::precision_error& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
