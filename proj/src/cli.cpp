#include "summa/cli.hpp"

#include "summa/bernoulli.hpp"
#include "summa/errors.hpp"
#include "summa/json_io.hpp"
#include "summa/legendre.hpp"
#include "summa/modular.hpp"
#include "summa/operators.hpp"
#include "summa/trig.hpp"
#include "summa/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <sstream>

namespace summa {

namespace {

using nlohmann::json;

// One invocation produces one report: a result plus, for identity checks, a
// residual/tolerance/status triple.
struct Report {
    std::string command;
    json params = json::object();
    json result;
    std::string text; // human rendering of result
    std::string residual;  // empty when not a check
    std::string tolerance;
    std::string status = "ok"; // ok | pass | fail
};

void emit(const Report& r, bool json_mode, std::ostream& out) {
    if (json_mode) {
        json j{{"command", r.command},
               {"params", r.params},
               {"result", r.result},
               {"residual", r.residual.empty() ? json() : json(r.residual)},
               {"tolerance", r.tolerance.empty() ? json() : json(r.tolerance)},
               {"status", r.status}};
        out << j.dump() << "\n";
    } else {
        out << r.text;
        if (!r.residual.empty())
            out << "residual = " << r.residual << "  tolerance = " << r.tolerance
                << "  [" << (r.status == "pass" ? "PASS" : "FAIL") << "]\n";
    }
}

Real parse_real(const std::string& s, mpfr_prec_t prec) {
    if (s.find('/') != std::string::npos) return Real(Rational(s), prec);
    return Real(s, prec);
}

Tau parse_tau(const std::string& s, mpfr_prec_t prec) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw PreconditionError("tau must be given as RE,IM");
    return Tau(Complex(parse_real(s.substr(0, comma), prec),
                       parse_real(s.substr(comma + 1), prec)));
}

json real_json(const Real& x, int digits) { return x.str(digits); }

struct CheckTriple {
    std::string residual;
    std::string tolerance;
    bool pass;
};

CheckTriple against_tolerance(const Real& residual, const Real& tol, int digits) {
    return {residual.str(digits < 20 ? digits : 20), tol.str(3), residual < tol};
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CliConfig cfg;
    bool digits_from_env = false;
    if (const char* env = std::getenv("SUMMA_DIGITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 6 && v <= 100000) {
            cfg.digits = static_cast<int>(v);
            digits_from_env = true;
        }
    }

    CLI::App app{"summa: exact Bernoulli/Rota-Baxter machinery and "
                 "high-precision verification of classical series, product "
                 "and lattice identities"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    bool timings = false;
    app.add_option("--digits", cfg.digits,
                   "working precision in decimal digits (>= 6)");
    app.add_option("--max-terms", cfg.max_terms, "series term budget (>= 10)");
    app.add_flag("--json", cfg.json, "emit a single JSON object");
    bool conv_plus = false;
    app.add_flag("--plus-half", conv_plus, "use the b_1 = +1/2 convention");

    // bern
    auto* c_bern = app.add_subcommand("bern", "Bernoulli numbers b_0..b_max");
    long bern_max = -1, bern_poly = -1, bern_quadratic = -1;
    c_bern->add_option("--max", bern_max, "largest index");
    c_bern->add_option("--poly", bern_poly, "print the degree-r Bernoulli polynomial");
    c_bern->add_option("--quadratic", bern_quadratic,
                       "evaluate both sides of the quadratic identity at n");

    // faulhaber
    auto* c_faul = app.add_subcommand("faulhaber", "power-sum polynomial S_r");
    long faul_r = 0;
    std::string faul_eval;
    c_faul->add_option("--r", faul_r, "power")->required();
    c_faul->add_option("--eval", faul_eval, "evaluate S_r at this rational");

    // em-coeffs
    auto* c_em = app.add_subcommand("em-coeffs",
                                    "coefficients of the summation operator series");
    long em_max = 8;
    c_em->add_option("--max", em_max, "largest index");

    // sum (polynomial operations + numeric Euler-Maclaurin + series demo)
    auto* c_sum = app.add_subcommand(
        "sum", "polynomial operator algebra and Euler-Maclaurin summation");
    std::string sum_coeffs, sum_g, sum_x, sum_mu = "1", sum_operator = "discrete";
    std::string sum_op, sum_numeric, sum_series_name, sum_eps = "1e-30";
    long sum_n = 10, sum_corrections = 2, sum_order = -1;
    c_sum->add_option("--coeffs", sum_coeffs, "polynomial as {\"coeffs\":[...]}");
    c_sum->add_option("--op", sum_op,
                      "eval|derive|integrate|discrete|star|rb|em|kappa");
    c_sum->add_option("--g", sum_g, "second polynomial for star/rb");
    c_sum->add_option("--x", sum_x, "evaluation point (rational)");
    c_sum->add_option("--mu", sum_mu, "Rota-Baxter weight (rational)");
    c_sum->add_option("--operator", sum_operator, "integration|discrete");
    c_sum->add_option("--order", sum_order, "truncation order for kappa");
    c_sum->add_option("--numeric", sum_numeric,
                      "numeric Euler-Maclaurin for a built-in function: recip1p|square");
    c_sum->add_option("--n", sum_n, "upper summation limit for --numeric");
    c_sum->add_option("--corrections", sum_corrections,
                      "Bernoulli correction terms for --numeric");
    c_sum->add_option("--series", sum_series_name,
                      "series engine demo: geometric");
    c_sum->add_option("--eps", sum_eps, "target tolerance for --series");

    // zeta
    auto* c_zeta = app.add_subcommand("zeta", "zeta at positive even integers");
    long zeta_even_arg = 2;
    c_zeta->add_option("--even", zeta_even_arg, "even argument 2n")->required();

    // trig
    auto* c_trig = app.add_subcommand("trig", "trigonometric identity checks");
    std::string trig_check, trig_z = "1", trig_eps;
    long trig_n = 6, trig_m = 5, trig_terms = 1000;
    c_trig->add_option("--check", trig_check,
                       "3.2|sine-product, 3.5|cot-finite, 3.6|cot-series, "
                       "3.8|sin-finite, 3.9|sin-product")
        ->required();
    c_trig->add_option("--n", trig_n, "product length (sine-product)");
    c_trig->add_option("--m", trig_m, "half-order, n = 2m+1");
    c_trig->add_option("--z", trig_z, "evaluation point");
    c_trig->add_option("--terms", trig_terms, "partial product length");
    c_trig->add_option("--eps", trig_eps, "series tolerance");

    // lambert
    auto* c_lambert = app.add_subcommand("lambert",
                                         "sum_n n^p/(e^{2 pi n a} - 1)");
    long lambert_p = 1;
    std::string lambert_a = "1";
    c_lambert->add_option("--p", lambert_p, "power")->required();
    c_lambert->add_option("--a", lambert_a, "positive scale")->required();

    // schlomilch
    auto* c_schl = app.add_subcommand("schlomilch",
                                      "residual of the symmetric identity");
    std::string schl_a = "1";
    c_schl->add_option("--a", schl_a, "positive parameter")->required();

    // ramanujan
    auto* c_ram = app.add_subcommand("ramanujan",
                                     "series vs b_{2l}/(4l) at odd l >= 3");
    long ram_l = 3;
    c_ram->add_option("--l", ram_l, "odd l >= 3")->required();

    // eta
    auto* c_eta = app.add_subcommand("eta", "Dedekind eta at tau");
    std::string eta_tau = "0,1";
    bool eta_check_transform = false, eta_check_logform = false;
    c_eta->add_option("--tau", eta_tau, "tau as RE,IM with IM > 0")->required();
    c_eta->add_flag("--check-transform", eta_check_transform,
                    "check eta(-1/tau) = sqrt(tau/i) eta(tau)");
    c_eta->add_flag("--check-logform", eta_check_logform,
                    "check the logarithmic form of the transformation");

    // eisenstein
    auto* c_eis = app.add_subcommand("eisenstein", "truncated lattice sum");
    long eis_k = 4;
    unsigned eis_cutoff = 100;
    std::string eis_tau = "0,1";
    c_eis->add_option("--k", eis_k, "even weight >= 4")->required();
    c_eis->add_option("--cutoff", eis_cutoff, "shell cutoff R");
    c_eis->add_option("--tau", eis_tau, "tau as RE,IM");

    // hurwitz
    auto* c_hur = app.add_subcommand("hurwitz", "lemniscatic coefficients E_1..E_n");
    long hur_n = 5;
    c_hur->add_option("--n", hur_n, "table length")->required();

    // lemniscate
    auto* c_lem = app.add_subcommand("lemniscate", "the lemniscate constant");
    long lem_lattice = -1;
    unsigned lem_cutoff = 50;
    c_lem->add_option("--lattice-check", lem_lattice,
                      "compare the weight-4n lattice sum with the closed form");
    c_lem->add_option("--cutoff", lem_cutoff, "shell cutoff for --lattice-check");

    // legendre
    auto* c_leg = app.add_subcommand("legendre", "the Legendre integral");
    std::string leg_a = "1", leg_routes = "closed,series,quadrature";
    c_leg->add_option("--a", leg_a, "parameter a != 0")->required();
    c_leg->add_option("--routes", leg_routes,
                      "comma list of closed,series,quadrature");

    // moment
    auto* c_mom = app.add_subcommand("moment", "Bernoulli moment identity at n");
    long mom_n = 1;
    c_mom->add_option("--n", mom_n, "moment index >= 1")->required();

    // verify
    auto* c_verify = app.add_subcommand("verify", "run the full check suite");
    std::string verify_suite = "all";
    c_verify->add_option("--suite", verify_suite, "only \"all\" is defined");
    c_verify->add_flag("--timings", timings, "include elapsed milliseconds");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run with --help for the command list\n";
        return 2;
    }

    if (cfg.digits < 6) {
        err << "usage error: --digits must be at least 6\n";
        return 2;
    }
    if (cfg.max_terms < 10) {
        err << "usage error: --max-terms must be at least 10\n";
        return 2;
    }
    Convention conv = conv_plus ? Convention::PlusHalf : Convention::MinusHalf;
    mpfr_prec_t prec = prec_for_digits(cfg.digits);
    Real tol = Real::pow10(-(cfg.digits - 4), prec);
    Real eps = Real::pow10(-(cfg.digits + 4), prec);
    int digits = cfg.digits;

    Report rep;
    rep.params["digits"] = digits;
    rep.params["digits_source"] =
        app.count("--digits") ? "flag" : (digits_from_env ? "env" : "default");
    rep.params["max_terms"] = cfg.max_terms;
    rep.params["convention"] = conv_plus ? "PlusHalf" : "MinusHalf";

    try {
        if (c_bern->parsed()) {
            rep.command = "bern";
            if (bern_quadratic >= 0) {
                rep.params["quadratic"] = bern_quadratic;
                auto [lhs, rhs] =
                    quadratic_identity(static_cast<std::size_t>(bern_quadratic));
                rep.result = json{{"lhs", lhs.str()}, {"rhs", rhs.str()}};
                rep.text = "lhs = " + lhs.str() + "\nrhs = " + rhs.str() + "\n";
                rep.status = (lhs == rhs) ? "pass" : "fail";
                rep.residual = (lhs == rhs) ? "exact" : "nonzero";
                rep.tolerance = "exact";
            } else if (bern_poly >= 0) {
                rep.params["poly"] = bern_poly;
                Polynomial b =
                    bernoulli_polynomial(static_cast<std::size_t>(bern_poly));
                rep.result = polynomial_to_json(b);
                rep.text = b.str() + "\n";
            } else {
                if (bern_max < 0) {
                    err << "usage error: bern requires --max, --poly or --quadratic\n";
                    return 2;
                }
                rep.params["max"] = bern_max;
                auto t = bernoulli_numbers(static_cast<std::size_t>(bern_max), conv);
                rep.result = bernoulli_table_to_json(t);
                std::ostringstream line;
                line << "[";
                for (std::size_t i = 0; i < t.values.size(); ++i) {
                    if (i) line << ", ";
                    line << '"' << t.values[i].str() << '"';
                }
                line << "]";
                rep.text = line.str() + "\n";
            }
        } else if (c_faul->parsed()) {
            rep.command = "faulhaber";
            rep.params["r"] = faul_r;
            if (faul_r < 0) {
                err << "usage error: --r must be nonnegative\n";
                return 2;
            }
            Polynomial s = faulhaber(static_cast<std::size_t>(faul_r));
            if (!faul_eval.empty()) {
                rep.params["eval"] = faul_eval;
                Rational v = s.eval(Rational(faul_eval));
                rep.result = v.str();
                rep.text = v.str() + "\n";
            } else {
                rep.result = polynomial_to_json(s);
                rep.text = polynomial_to_json(s).dump() + "\n";
            }
        } else if (c_em->parsed()) {
            rep.command = "em-coeffs";
            rep.params["max"] = em_max;
            if (em_max < 0) {
                err << "usage error: --max must be nonnegative\n";
                return 2;
            }
            auto em = em_coefficients(static_cast<std::size_t>(em_max));
            json arr = json::array();
            std::ostringstream line;
            line << "[";
            for (std::size_t i = 0; i < em.betas.size(); ++i) {
                arr.push_back(em.betas[i].str());
                if (i) line << ", ";
                line << '"' << em.betas[i].str() << '"';
            }
            line << "]";
            rep.result = arr;
            rep.text = line.str() + "\n";
        } else if (c_sum->parsed()) {
            rep.command = "sum";
            if (!sum_series_name.empty()) {
                if (sum_series_name != "geometric") {
                    err << "usage error: unknown --series (only: geometric)\n";
                    return 2;
                }
                rep.params["series"] = sum_series_name;
                rep.params["eps"] = sum_eps;
                Real seps = parse_real(sum_eps, prec);
                auto r = sum_series<Real>(
                    [&](long k) { return Real::pow2(-k, prec); },
                    [&](long k) { return Real::pow2(-k, prec); }, seps,
                    cfg.max_terms, Real(0L, prec));
                rep.result = json{{"value", real_json(r.value, digits)},
                                  {"tail_bound", r.tail_bound.str(3)},
                                  {"terms", r.terms}};
                rep.text = "value = " + r.value.str(digits) + "\nterms = " +
                           std::to_string(r.terms) + "  tail_bound = " +
                           r.tail_bound.str(3) + "\n";
            } else if (!sum_numeric.empty()) {
                rep.params["numeric"] = sum_numeric;
                rep.params["n"] = sum_n;
                rep.params["corrections"] = sum_corrections;
                std::unique_ptr<SmoothFunction> f;
                if (sum_numeric == "recip1p")
                    f = std::make_unique<ReciprocalShifted>();
                else if (sum_numeric == "square")
                    f = std::make_unique<PolynomialFunction>(
                        Polynomial::monomial(2));
                else {
                    err << "usage error: unknown --numeric function (recip1p|square)\n";
                    return 2;
                }
                if (sum_n < 1 || sum_corrections < 0) {
                    err << "usage error: --n >= 1 and --corrections >= 0 required\n";
                    return 2;
                }
                auto r = euler_maclaurin_numeric(
                    *f, static_cast<unsigned long>(sum_n),
                    static_cast<std::size_t>(sum_corrections), prec);
                rep.result = json{{"value", real_json(r.value, digits)},
                                  {"terms_used", r.terms_used},
                                  {"remainder_estimate", r.remainder_estimate.str(3)}};
                rep.text = "value = " + r.value.str(digits) +
                           "\nremainder_estimate = " +
                           r.remainder_estimate.str(3) + "\n";
            } else {
                if (sum_coeffs.empty() || sum_op.empty()) {
                    err << "usage error: sum requires --coeffs and --op "
                           "(or --numeric / --series)\n";
                    return 2;
                }
                Polynomial f = polynomial_from_json(json::parse(sum_coeffs));
                rep.params["coeffs"] = json::parse(sum_coeffs);
                rep.params["op"] = sum_op;
                OperatorKind opk = (sum_operator == "integration")
                                       ? OperatorKind::Integration
                                       : OperatorKind::DiscreteSum;
                auto poly_result = [&](const Polynomial& p) {
                    rep.result = polynomial_to_json(p);
                    rep.text = polynomial_to_json(p).dump() + "\n";
                };
                if (sum_op == "eval") {
                    if (sum_x.empty()) {
                        err << "usage error: --op eval requires --x\n";
                        return 2;
                    }
                    Rational v = f.eval(Rational(sum_x));
                    rep.result = v.str();
                    rep.text = v.str() + "\n";
                } else if (sum_op == "derive") {
                    poly_result(f.derivative());
                } else if (sum_op == "integrate") {
                    poly_result(f.antiderivative());
                } else if (sum_op == "discrete") {
                    poly_result(discrete_sum(f));
                } else if (sum_op == "em") {
                    poly_result(euler_maclaurin_poly(f));
                } else if (sum_op == "kappa") {
                    std::size_t order =
                        sum_order >= 0
                            ? static_cast<std::size_t>(sum_order)
                            : (f.is_zero() ? 0 : *f.degree());
                    poly_result(kappa_shift(f, order));
                } else if (sum_op == "star" || sum_op == "rb") {
                    if (sum_g.empty()) {
                        err << "usage error: --op " << sum_op
                            << " requires --g\n";
                        return 2;
                    }
                    Polynomial g = polynomial_from_json(json::parse(sum_g));
                    Rational mu(sum_mu);
                    if (sum_op == "star")
                        poly_result(star(f, g, opk, mu));
                    else {
                        Polynomial r = rb_residual(f, g, opk, mu);
                        rep.result = polynomial_to_json(r);
                        rep.text = polynomial_to_json(r).dump() + "\n";
                        rep.status = r.is_zero() ? "pass" : "fail";
                        rep.residual = r.is_zero() ? "exact" : "nonzero";
                        rep.tolerance = "exact";
                    }
                } else {
                    err << "usage error: unknown --op \"" << sum_op << "\"\n";
                    return 2;
                }
            }
        } else if (c_zeta->parsed()) {
            rep.command = "zeta";
            rep.params["even"] = zeta_even_arg;
            if (zeta_even_arg < 2 || zeta_even_arg % 2 != 0) {
                err << "usage error: --even must be a positive even integer\n";
                return 2;
            }
            auto z = zeta_even(static_cast<unsigned>(zeta_even_arg / 2), digits);
            rep.result = json{{"pi_coefficient", z.pi_coefficient.str()},
                              {"value", real_json(z.value, digits)}};
            rep.text = "zeta(" + std::to_string(zeta_even_arg) + ") = " +
                       z.pi_coefficient.str() + " * pi^" +
                       std::to_string(zeta_even_arg) + " = " +
                       z.value.str(digits) + "\n";
        } else if (c_trig->parsed()) {
            rep.command = "trig";
            rep.params["check"] = trig_check;
            Real z = parse_real(trig_z, prec);
            auto finish_identity = [&](const IdentityReport& r) {
                auto t = against_tolerance(r.residual, tol, digits);
                rep.result = json{{"lhs", real_json(r.lhs, digits)},
                                  {"rhs", real_json(r.rhs, digits)}};
                rep.text = "lhs = " + r.lhs.str(digits) + "\nrhs = " +
                           r.rhs.str(digits) + "\n";
                rep.residual = t.residual;
                rep.tolerance = t.tolerance;
                rep.status = t.pass ? "pass" : "fail";
            };
            if (trig_check == "3.2" || trig_check == "sine-product") {
                rep.params["n"] = trig_n;
                finish_identity(
                    sine_product_identity(static_cast<unsigned>(trig_n), digits));
            } else if (trig_check == "3.5" || trig_check == "cot-finite") {
                rep.params["m"] = trig_m;
                rep.params["z"] = trig_z;
                finish_identity(cot_finite_identity(
                    z, static_cast<unsigned>(trig_m)));
            } else if (trig_check == "3.6" || trig_check == "cot-series") {
                Real series_eps =
                    trig_eps.empty() ? Real("1e-6", prec) : parse_real(trig_eps, prec);
                rep.params["z"] = trig_z;
                rep.params["eps"] = series_eps.str(3);
                auto r = cot_partial_fraction(z, series_eps, cfg.max_terms);
                Real reference = cot(z);
                Real resid = abs(r.value - reference);
                Real combined = series_eps + r.tail_bound;
                auto t = against_tolerance(resid, combined + combined, digits);
                rep.result = json{{"value", real_json(r.value, digits)},
                                  {"cot", real_json(reference, digits)},
                                  {"terms", r.terms},
                                  {"tail_bound", r.tail_bound.str(3)}};
                rep.text = "series = " + r.value.str(digits) + "\ncot(z) = " +
                           reference.str(digits) + "\nterms = " +
                           std::to_string(r.terms) + "\n";
                rep.residual = t.residual;
                rep.tolerance = t.tolerance;
                rep.status = t.pass ? "pass" : "fail";
            } else if (trig_check == "3.8" || trig_check == "sin-finite") {
                rep.params["m"] = trig_m;
                rep.params["z"] = trig_z;
                finish_identity(
                    sin_finite_identity(z, static_cast<unsigned>(trig_m)));
            } else if (trig_check == "3.9" || trig_check == "sin-product") {
                rep.params["z"] = trig_z;
                rep.params["terms"] = trig_terms;
                Real v = sin_product(z, static_cast<unsigned long>(trig_terms),
                                     digits);
                Real reference = sin(at_prec(z, prec));
                rep.result = json{{"partial_product", real_json(v, digits)},
                                  {"sin", real_json(reference, digits)}};
                rep.text = "partial product = " + v.str(digits) + "\nsin(z) = " +
                           reference.str(digits) + "\n";
            } else {
                err << "usage error: unknown --check \"" << trig_check << "\"\n";
                return 2;
            }
        } else if (c_lambert->parsed()) {
            rep.command = "lambert";
            rep.params["p"] = lambert_p;
            rep.params["a"] = lambert_a;
            if (lambert_p < 0) {
                err << "usage error: --p must be >= 0\n";
                return 2;
            }
            auto r = lambert_sum(static_cast<unsigned>(lambert_p),
                                 parse_real(lambert_a, prec), eps, cfg.max_terms);
            rep.result = json{{"value", real_json(r.value, digits)},
                              {"tail_bound", r.tail_bound.str(3)},
                              {"terms", r.terms}};
            rep.text = "value = " + r.value.str(digits) + "\nterms = " +
                       std::to_string(r.terms) + "  tail_bound = " +
                       r.tail_bound.str(3) + "\n";
        } else if (c_schl->parsed()) {
            rep.command = "schlomilch";
            rep.params["a"] = schl_a;
            Real r = schlomilch_residual(parse_real(schl_a, prec), eps,
                                         cfg.max_terms);
            auto t = against_tolerance(r, tol, digits);
            rep.result = json{{"residual", t.residual}};
            rep.text = "";
            rep.residual = t.residual;
            rep.tolerance = t.tolerance;
            rep.status = t.pass ? "pass" : "fail";
        } else if (c_ram->parsed()) {
            rep.command = "ramanujan";
            rep.params["l"] = ram_l;
            if (ram_l < 0) {
                err << "usage error: --l must be positive\n";
                return 2;
            }
            auto r = ramanujan_check(static_cast<unsigned>(ram_l), digits,
                                     cfg.max_terms);
            auto t = against_tolerance(r.residual, tol, digits);
            rep.result = json{{"series", real_json(r.series, digits)},
                              {"closed", r.closed.str()}};
            rep.text = "series = " + r.series.str(digits) + "\nclosed = " +
                       r.closed.str() + "\n";
            rep.residual = t.residual;
            rep.tolerance = t.tolerance;
            rep.status = t.pass ? "pass" : "fail";
        } else if (c_eta->parsed()) {
            rep.command = "eta";
            rep.params["tau"] = eta_tau;
            Tau tau = parse_tau(eta_tau, prec);
            if (eta_check_transform || eta_check_logform) {
                Real r = eta_check_transform
                             ? eta_transform_residual(tau, eps, cfg.max_terms)
                             : eta_log_form_residual(tau, eps, cfg.max_terms);
                rep.params["check"] =
                    eta_check_transform ? "transform" : "log-form";
                auto t = against_tolerance(r, tol, digits);
                rep.result = json{{"residual", t.residual}};
                rep.text = "";
                rep.residual = t.residual;
                rep.tolerance = t.tolerance;
                rep.status = t.pass ? "pass" : "fail";
            } else {
                Complex v = dedekind_eta(tau, eps, cfg.max_terms);
                rep.result = json{{"value", v.str(digits)}};
                rep.text = "eta(tau) = " + v.str(digits) + "\n";
            }
        } else if (c_eis->parsed()) {
            rep.command = "eisenstein";
            rep.params["k"] = eis_k;
            rep.params["cutoff"] = eis_cutoff;
            rep.params["tau"] = eis_tau;
            if (eis_k < 4 || eis_k % 2 != 0) {
                err << "usage error: --k must be even and >= 4\n";
                return 2;
            }
            Tau tau = parse_tau(eis_tau, prec);
            Complex v = eisenstein_truncated(static_cast<unsigned>(eis_k), tau,
                                             eis_cutoff, digits);
            rep.result = json{{"value", v.str(digits)}};
            rep.text = "E_" + std::to_string(eis_k) + " ~ " + v.str(digits) +
                       "  (cutoff R = " + std::to_string(eis_cutoff) + ")\n";
        } else if (c_hur->parsed()) {
            rep.command = "hurwitz";
            rep.params["n"] = hur_n;
            if (hur_n < 1) {
                err << "usage error: --n must be >= 1\n";
                return 2;
            }
            auto e = hurwitz_lemniscatic(static_cast<std::size_t>(hur_n));
            json arr = json::array();
            std::ostringstream line;
            for (std::size_t i = 0; i < e.size(); ++i) {
                arr.push_back(e[i].str());
                line << "E_" << (i + 1) << " = " << e[i].str() << "\n";
            }
            rep.result = arr;
            rep.text = line.str();
        } else if (c_lem->parsed()) {
            rep.command = "lemniscate";
            if (lem_lattice >= 1) {
                rep.params["lattice_check"] = lem_lattice;
                rep.params["cutoff"] = lem_cutoff;
                auto r = lemniscatic_lattice_check(
                    static_cast<unsigned>(lem_lattice), lem_cutoff, digits);
                Real lattice_tol = Real::pow10(-8, prec);
                auto t = against_tolerance(r.residual, lattice_tol, digits);
                rep.result = json{{"lattice", real_json(r.lattice, digits)},
                                  {"closed", real_json(r.closed, digits)}};
                rep.text = "lattice = " + r.lattice.str(digits) + "\nclosed  = " +
                           r.closed.str(digits) + "\n";
                rep.residual = t.residual;
                rep.tolerance = t.tolerance;
                rep.status = t.pass ? "pass" : "fail";
            } else {
                Real omega = lemniscate_constant(digits);
                Real oracle = lemniscate_binomial_series(digits);
                auto t = against_tolerance(abs(omega - oracle), tol, digits);
                rep.result = json{{"value", real_json(omega, digits)},
                                  {"binomial_series", real_json(oracle, digits)}};
                rep.text = "omega = " + omega.str(digits) + "\n";
                rep.residual = t.residual;
                rep.tolerance = t.tolerance;
                rep.status = t.pass ? "pass" : "fail";
            }
        } else if (c_leg->parsed()) {
            rep.command = "legendre";
            rep.params["a"] = leg_a;
            rep.params["routes"] = leg_routes;
            Real a = parse_real(leg_a, prec);
            bool want_closed = leg_routes.find("closed") != std::string::npos;
            bool want_series = leg_routes.find("series") != std::string::npos;
            bool want_quad = leg_routes.find("quadrature") != std::string::npos;
            if (!want_closed && !want_series && !want_quad) {
                err << "usage error: --routes must name at least one of "
                       "closed,series,quadrature\n";
                return 2;
            }
            json result = json::object();
            std::ostringstream text;
            Real closed(0L, prec), series(0L, prec), quad(0L, prec);
            if (want_closed) {
                closed = legendre_closed_form(a);
                result["closed"] = real_json(closed, digits);
                text << "closed     = " << closed.str(digits) << "\n";
            }
            if (want_series) {
                series = legendre_series(a, Real::pow10(-(digits - 2), prec)).value;
                result["series"] = real_json(series, digits);
                text << "series     = " << series.str(digits) << "\n";
            }
            if (want_quad) {
                quad = legendre_quadrature(a, Real(8, prec),
                                           Real::pow10(-11, prec));
                result["quadrature"] = real_json(quad, digits);
                text << "quadrature = " << quad.str(digits) << "\n";
            }
            rep.result = result;
            rep.text = text.str();
            if (want_closed && want_series && want_quad) {
                Real tol_series = Real::pow10(-12, prec);
                Real tol_quad = Real::pow10(-9, prec);
                bool pass = abs(closed - series) < tol_series &&
                            abs(closed - quad) < tol_quad &&
                            abs(series - quad) < tol_quad;
                Real worst = abs(closed - series);
                if (abs(closed - quad) > worst) worst = abs(closed - quad);
                rep.residual = worst.str(20);
                rep.tolerance = tol_quad.str(3);
                rep.status = pass ? "pass" : "fail";
            }
        } else if (c_mom->parsed()) {
            rep.command = "moment";
            rep.params["n"] = mom_n;
            if (mom_n < 1) {
                err << "usage error: --n must be >= 1\n";
                return 2;
            }
            auto exact = bernoulli_moment_exact(static_cast<unsigned>(mom_n));
            auto r = bernoulli_moment(static_cast<unsigned>(mom_n), digits);
            bool exact_equal = exact.first == exact.second;
            auto t = against_tolerance(r.residual, tol, digits);
            rep.result = json{{"closed_rational", exact.second.str()},
                              {"zeta_route_rational", exact.first.str()},
                              {"series_value", real_json(r.series_value, digits)},
                              {"closed_value", real_json(r.closed_value, digits)}};
            rep.text = "closed (rational) = " + exact.second.str() + "\n" +
                       "zeta route        = " + exact.first.str() + "\n" +
                       "numeric residual  = " + t.residual + "\n";
            rep.residual = t.residual;
            rep.tolerance = t.tolerance;
            rep.status = (exact_equal && t.pass) ? "pass" : "fail";
        } else if (c_verify->parsed()) {
            rep.command = "verify";
            if (verify_suite != "all") {
                err << "usage error: --suite only supports \"all\"\n";
                return 2;
            }
            VerifyOptions vo;
            vo.digits = digits;
            vo.max_terms = cfg.max_terms;
            auto results = run_verify(vo);
            if (cfg.json) {
                json arr = json::array();
                for (const auto& r : results) {
                    json c{{"name", r.name},
                           {"criterion", r.criterion},
                           {"status", r.pass ? "pass" : "fail"},
                           {"residual", r.residual},
                           {"tolerance", r.tolerance}};
                    if (timings) c["elapsed_ms"] = r.elapsed_ms;
                    if (!r.detail.empty()) c["detail"] = r.detail;
                    arr.push_back(std::move(c));
                }
                json j{{"command", "verify"},
                       {"params", rep.params},
                       {"result", arr},
                       {"residual", json()},
                       {"tolerance", json()},
                       {"status", all_passed(results) ? "pass" : "fail"}};
                out << j.dump() << "\n";
            } else {
                out << render_verify_text(results, vo, timings);
            }
            return all_passed(results) ? 0 : 1;
        } else {
            err << "usage error: no subcommand given\n";
            return 2;
        }
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << " (best value " << e.best_value
            << ", bound " << e.best_bound << ", terms " << e.terms << ")\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: bad JSON input: " << e.what() << "\n";
        return 2;
    }

    emit(rep, cfg.json, out);
    return rep.status == "fail" ? 1 : 0;
}

const std::vector<OperationCoverage>& operation_registry() {
    static const std::vector<OperationCoverage> reg = {
        {"poly_eval", "sum",
         {"sum", "--coeffs", R"({"coeffs":["0","0","1"]})", "--op", "eval",
          "--x", "2/3"}},
        {"derive", "sum",
         {"sum", "--coeffs", R"({"coeffs":["0","0","1"]})", "--op", "derive"}},
        {"integrate", "sum",
         {"sum", "--coeffs", R"({"coeffs":["1"]})", "--op", "integrate"}},
        {"discrete_sum", "sum",
         {"sum", "--coeffs", R"({"coeffs":["0","0","1"]})", "--op", "discrete"}},
        {"star", "sum",
         {"sum", "--coeffs", R"({"coeffs":["1"]})", "--g",
          R"({"coeffs":["1"]})", "--op", "star", "--operator", "discrete",
          "--mu", "1"}},
        {"rb_residual", "sum",
         {"sum", "--coeffs", R"({"coeffs":["0","1"]})", "--g",
          R"({"coeffs":["0","0","1"]})", "--op", "rb", "--operator",
          "discrete", "--mu", "1"}},
        {"bernoulli_numbers", "bern", {"bern", "--max", "4"}},
        {"faulhaber", "faulhaber", {"faulhaber", "--r", "10", "--eval", "1000"}},
        {"bernoulli_polynomial", "bern", {"bern", "--poly", "2"}},
        {"em_coefficients", "em-coeffs", {"em-coeffs", "--max", "4"}},
        {"euler_maclaurin_poly", "sum",
         {"sum", "--coeffs", R"({"coeffs":["0","0","1"]})", "--op", "em"}},
        {"quadratic_identity_check", "bern", {"bern", "--quadratic", "3"}},
        {"kappa_shift_check", "sum",
         {"sum", "--coeffs", R"({"coeffs":["0","0","1"]})", "--op", "kappa",
          "--order", "2"}},
        {"euler_maclaurin_numeric", "sum",
         {"sum", "--numeric", "recip1p", "--n", "100", "--corrections", "3"}},
        {"hp_constants_and_elementary", "eta", {"eta", "--tau", "0,1"}},
        {"sum_series", "sum", {"sum", "--series", "geometric", "--eps", "1e-30"}},
        {"sine_product_identity", "trig", {"trig", "--check", "3.2", "--n", "6"}},
        {"cot_finite_identity", "trig",
         {"trig", "--check", "3.5", "--m", "5", "--z", "1.1"}},
        {"cot_partial_fraction", "trig",
         {"trig", "--check", "3.6", "--z", "1", "--eps", "1e-6"}},
        {"sin_finite_identity", "trig",
         {"trig", "--check", "3.8", "--m", "3", "--z", "0.7"}},
        {"sin_product", "trig",
         {"trig", "--check", "3.9", "--z", "1.5", "--terms", "500"}},
        {"zeta_even", "zeta", {"zeta", "--even", "4"}},
        {"lambert_sum", "lambert", {"lambert", "--p", "1", "--a", "1"}},
        {"schlomilch_residual", "schlomilch", {"schlomilch", "--a", "2"}},
        {"ramanujan_check", "ramanujan", {"ramanujan", "--l", "3"}},
        {"dedekind_eta", "eta", {"eta", "--tau", "0,1"}},
        {"eta_transform_residual", "eta",
         {"eta", "--tau", "0,2", "--check-transform"}},
        {"eta_log_form_residual", "eta",
         {"eta", "--tau", "0,2", "--check-logform"}},
        {"eisenstein_truncated", "eisenstein",
         {"eisenstein", "--k", "4", "--cutoff", "30"}},
        {"hurwitz_lemniscatic", "hurwitz", {"hurwitz", "--n", "5"}},
        {"lemniscate_constant", "lemniscate", {"lemniscate", "--digits", "26"}},
        {"lemniscatic_lattice_check", "lemniscate",
         {"lemniscate", "--lattice-check", "2", "--cutoff", "30"}},
        {"legendre_closed_form", "legendre",
         {"legendre", "--a", "1", "--routes", "closed"}},
        {"legendre_series", "legendre",
         {"legendre", "--a", "1", "--routes", "closed,series"}},
        {"legendre_quadrature_oracle", "legendre",
         {"legendre", "--a", "1", "--digits", "12", "--routes", "quadrature"}},
        {"bernoulli_moment", "moment", {"moment", "--n", "3"}},
        {"verify", "verify", {"verify", "--suite", "all", "--digits", "8"}},
    };
    return reg;
}

} // namespace summa
