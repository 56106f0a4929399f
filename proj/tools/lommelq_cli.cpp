// Command-line front-end. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 2 usage or parse error, 3 evaluation error, 4 hypothesis gate.

#include <cstdio>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lommelq/bessel.hpp"
#include "lommelq/census.hpp"
#include "lommelq/errors.hpp"
#include "lommelq/lommel.hpp"
#include "lommelq/verify.hpp"
#include "lommelq/wright.hpp"

using namespace lommelq;
using nlohmann::json;

namespace {

constexpr const char* tool_version = "0.1.0";
constexpr double pi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
    static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex full("^\\s*([+-]?" + num + ")\\s*([+-])\\s*(" + num + ")?\\s*[ij]\\s*$");
    static const std::regex real_only("^\\s*([+-]?" + num + ")\\s*$");
    static const std::regex imag_only("^\\s*([+-]?)(" + num + ")?\\s*[ij]\\s*$");
    std::smatch m;
    if (std::regex_match(text, m, full)) {
        double im = m[3].matched ? std::stod(m[3]) : 1.0;
        return {std::stod(m[1]), m[2] == "-" ? -im : im};
    }
    if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(text, m, imag_only)) {
        double im = m[2].matched ? std::stod(m[2]) : 1.0;
        return {0.0, m[1] == "-" ? -im : im};
    }
    throw UsageError("cannot parse complex literal '" + text + "'");
}

std::pair<long, long> parse_range(const std::string& text) {
    static const std::regex range(R"(^\s*([+-]?\d+)\s*(?::\s*([+-]?\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, range)) throw UsageError("cannot parse integer range '" + text + "'");
    long lo = std::stol(m[1]);
    long hi = m[2].matched ? std::stol(m[2]) : lo;
    if (hi < lo) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("cannot parse number '" + item + "' in list '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

struct Output {
    bool header = true;

    void json_header(const std::string& verb) const {
        if (header) std::cout << json{{"tool", "lommelq"}, {"version", tool_version}, {"verb", verb}}.dump() << '\n';
    }
    void csv_header(const std::string& verb) const {
        if (header) std::cout << "# lommelq " << tool_version << ' ' << verb << '\n';
    }
};

// Options shared by verbs describing a solution of the general equation.
struct SpecOptions {
    std::string A = "0", B = "0", L = "1", M = "1", N = "0", nu = "0";
    std::vector<std::string> terms;

    void add(CLI::App* app) {
        app->add_option("--A", A, "coefficient of J");
        app->add_option("--B", B, "coefficient of Y");
        app->add_option("--L", L, "scale L");
        app->add_option("--M", M, "exponent rate M");
        app->add_option("--N", N, "damping N");
        app->add_option("--nu", nu, "Bessel order");
        app->add_option("--term", terms, "right-hand term \"sigma,mu\" (repeatable)");
    }

    SolutionSpec build() const {
        SolutionSpec s;
        s.A = parse_complex(A);
        s.B = parse_complex(B);
        s.params.L = parse_complex(L);
        s.params.M = parse_complex(M);
        s.params.N = parse_complex(N);
        s.params.nu = parse_complex(nu);
        for (const auto& t : terms) {
            auto comma = t.find(',');
            if (comma == std::string::npos) throw UsageError("term '" + t + "' must read \"sigma,mu\"");
            s.params.terms.push_back({parse_complex(t.substr(0, comma)), parse_complex(t.substr(comma + 1))});
        }
        try {
            s.params.validate();
        } catch (const ParamError& e) {
            throw UsageError(e.what());
        }
        return s;
    }
};

// Options for the auxiliary functions g and ghat.
struct AuxOptions {
    std::string fn = "ghat", C = "1", D = "0", sigma = "1", mu = "0";
    std::optional<long> m;
    std::string k = "3";
    bool modified = false, emit_contour = false, emit_zeros = false;
    int per_segment = 0;
    CountOptions count;

    void add(CLI::App* app) {
        app->add_option("--fn", fn, "g or ghat")->check(CLI::IsMember({"g", "ghat"}));
        app->add_option("--C", C, "coefficient of e^{i zeta}");
        app->add_option("--D", D, "coefficient of e^{-i zeta} (ghat)");
        app->add_option("--sigma", sigma, "coefficient of the power or constant term");
        app->add_option("--mu", mu, "power parameter mu (g)");
        app->add_option("--m", m, "subsequence parameter (g); default: smallest admissible");
        app->add_option("--k", k, "contour index or range a:b");
        app->add_flag("--modified", modified, "modified ghat contour for equal moduli");
        app->add_flag("--emit-zeros", emit_zeros, "list the known zeros inside each contour");
        app->add_option("--per-segment", per_segment, "polyline samples per segment");
        app->add_option("--zero-distance", count.zero_distance, "minimum distance of a zero from the contour");
        app->add_option("--max-samples", count.max_samples, "quadrature sample budget");
        app->add_option("--integer-tol", count.integer_tol, "allowed distance of the winding from an integer");
        app->add_option("--rel-noise", count.rel_noise, "relative accuracy of f'/f along the contour");
    }
};

AuxParams aux_params(const AuxOptions& o) {
    try {
        return make_aux_params(parse_complex(o.C), parse_complex(o.sigma), parse_complex(o.mu), parse_complex(o.D));
    } catch (const ParamError& e) {
        throw UsageError(e.what());
    }
}

Contour aux_contour(const AuxOptions& o, const AuxParams& p, long m, long k) {
    if (o.fn == "g") return build_contour_omega_g(p, m, k);
    return build_contour_omega_ghat(p, k, o.modified);
}

AnalyticFn aux_fn(const AuxOptions& o, const AuxParams& p) {
    if (o.fn == "g") return [p](const BranchPoint& z) { return std::make_pair(aux_g(p, z), aux_g_derivative(p, z)); };
    return [p](const BranchPoint& z) {
        Complex v = z.value();
        return std::make_pair(aux_ghat(p, v), aux_ghat_derivative(p, v));
    };
}

long resolve_m(const AuxOptions& o, const AuxParams& p) {
    if (o.fn != "g") return 0;
    if (o.m) return *o.m;
    long m = smallest_admissible_m(p);
    if (m < 0) throw HypothesisError("no admissible m found for these parameters");
    return m;
}

json zeros_inside(const AuxOptions& o, const AuxParams& p, const Contour& c, long m, long k) {
    json out = json::array();
    if (o.fn == "ghat") {
        for (const auto& z : ghat_zeros(p, -2, 3 * k + 2))
            if (c.contains(z.zeta)) out.push_back({{"k", z.k}, {"family", std::string(1, z.family)}, {"zeta", cjson(z.zeta)}});
        return out;
    }
    WrightTarget t = g_to_wright(p);
    long span = 6 * m * k * k + 16;
    for (long n = -span; n <= span; ++n) {
        if (n == 0 || !wright_valid(t, n)) continue;
        BranchPoint z = wright_zero_to_zeta(p, wright_refine(t, wright_seed(t, n)).z);
        if (c.contains(z.value())) out.push_back({{"n", n}, {"zeta", cjson(z.value())}});
    }
    return out;
}

int run_contours(const AuxOptions& o, const Output& out, bool polyline) {
    AuxParams p = aux_params(o);
    auto [k_lo, k_hi] = parse_range(o.k);
    if (k_lo < 1) throw UsageError("contour index k must be positive");
    long m = resolve_m(o, p);
    if (polyline) {
        if (k_lo != k_hi) throw UsageError("polyline output takes a single k");
        Contour c = aux_contour(o, p, m, k_lo);
        out.csv_header("contour");
        std::cout << "re,im\n";
        char buf[80];
        for (Complex z : c.polyline(o.per_segment)) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
            std::cout << buf;
        }
        return 0;
    }
    out.json_header("census");
    AnalyticFn f = aux_fn(o, p);
    for (long k = k_lo; k <= k_hi; ++k) {
        Contour c = aux_contour(o, p, m, k);
        CountResult r = count_zeros(f, c, o.count);
        json rec{{"k", k}, {"winding", r.winding}, {"raw_winding", r.raw_winding}, {"min_abs", r.min_abs_on_contour},
                 {"samples", r.samples}};
        if (o.fn == "g") rec["m"] = m;
        if (o.emit_zeros) rec["zeros_inside"] = zeros_inside(o, p, c, m, k);
        std::cout << rec.dump() << '\n';
    }
    return 0;
}

int run_eval(const std::string& fn, const std::string& nu_s, const std::string& mu_s, const std::string& zeta_s,
             std::optional<double> arg, int shift, const Output& out) {
    Complex nu = parse_complex(nu_s), zeta = parse_complex(zeta_s);
    BranchPoint z = BranchPoint::principal(zeta);
    // the origin is read as the limit from positive moduli
    bool at_origin = zeta == Complex(0.0);
    if (at_origin && fn != "besselj") throw PoleError(fn + " has no finite limit at the origin in general");
    if (at_origin) z.modulus = std::numeric_limits<double>::min();
    if (arg) z.arg = *arg;
    z = z.rotated(-shift * pi);
    EvalResult r;
    if (fn == "besselj") {
        r = bessel_j(nu, z);
    } else if (fn == "bessely") {
        r = bessel_y(nu, z);
    } else if (fn == "hankel1" || fn == "hankel2") {
        r = hankel(fn == "hankel1" ? 1 : 2, nu, z);
    } else {
        r = lommel_on_branch({parse_complex(mu_s), nu}, z);
    }
    out.json_header("eval");
    json rec{{"fn", fn}, {"nu", cjson(nu)}, {"modulus", z.modulus}, {"arg", z.arg}, {"value", cjson(r.value)},
             {"abs_err_est", r.abs_err_est}, {"method", r.method_name()}};
    if (fn == "lommel") rec["mu"] = cjson(parse_complex(mu_s));
    if (at_origin) rec["limit"] = "modulus to 0+";
    std::cout << rec.dump() << '\n';
    return 0;
}

int run_wright(const std::string& a_s, const std::string& n_s, double tol, int j_max, bool refine, const Output& out) {
    Complex a = parse_complex(a_s);
    if (a == Complex(0.0)) throw UsageError("a must be non-zero");
    auto [lo, hi] = parse_range(n_s);
    WrightTarget t = make_wright_target(a);
    out.json_header("wright");
    bool any = false;
    for (long n = lo; n <= hi; ++n) {
        json rec{{"n", n}};
        try {
            if (!wright_valid(t, n)) throw ValidityError("seed validity condition fails for this n");
            ZeroSeed s = wright_seed(t, n, j_max);
            Box b = wright_bounds(t, n);
            rec["seed"] = cjson(s.z());
            rec["box"] = json::array({b.x_lo, b.x_hi, b.y_lo, b.y_hi});
            if (refine) {
                RefinedZero r = wright_refine(t, s, tol);
                rec["refined"] = cjson(r.z);
                rec["residual"] = r.residual;
                rec["iterations"] = r.iterations;
                rec["inside_box"] = b.contains(r.z);
            }
            any = true;
        } catch (const Error& e) {
            rec["error"] = e.kind();
            rec["message"] = e.what();
        }
        std::cout << rec.dump() << '\n';
    }
    return any ? 0 : 3;
}

int run_solution_census(const SpecOptions& so, const std::string& radii, const Output& out) {
    SolutionSpec s = so.build();
    CensusCurve c = zero_census(s, parse_list(radii));
    out.json_header("census");
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back({{"r", p.r}, {"count", p.count}});
    std::cout << json{{"points", pts},
                      {"lambda_estimate", c.lambda_estimate},
                      {"lambda_infinite", c.lambda_infinite},
                      {"saturated", c.saturated}}
                     .dump()
              << '\n';
    return 0;
}

int run_verify(const SpecOptions& so, const std::vector<std::string>& zs, double h, const Output& out) {
    SolutionSpec s = so.build();
    std::vector<Complex> grid;
    for (const auto& z : zs) grid.push_back(parse_complex(z));
    if (grid.empty())
        for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0})
            for (double y : {-1.5, -0.5, 0.5, 1.5}) grid.push_back({x, y});
    out.json_header("verify");
    json pts = json::array();
    double worst = 0.0;
    for (Complex z : grid) {
        Complex res = ode_residual_z(s, z, h);
        double scale = ode_residual_z_scale(s, z);
        double rel = std::abs(res) / scale;
        worst = std::max(worst, rel);
        pts.push_back({{"z", cjson(z)}, {"residual", cjson(res)}, {"scale", scale}, {"relative", rel}});
    }
    std::cout << json{{"points", pts}, {"residual_max", worst}}.dump() << '\n';
    return 0;
}

json verdict_json(const QuantizationVerdict& v) {
    json classes = json::array();
    for (const auto& c : v.per_term) classes.push_back(c.to_string());
    return {{"finite_lambda_predicted", v.finite_lambda_predicted},
            {"coefficients_vanish", v.coefficients_vanish},
            {"per_term", classes}};
}

int run_table1(int row, int p, const std::string& sigma_s, const Output& out) {
    Complex sigma = parse_complex(sigma_s);
    Table1Report r;
    try {
        r = table1_case(row, p, sigma);
    } catch (const ParamError& e) {
        throw UsageError(e.what());
    }
    out.json_header("table1");
    json pts = json::array();
    for (const auto& c : r.census.points) pts.push_back({{"r", c.r}, {"count", c.count}});
    std::cout << json{{"row", r.row},
                      {"p", r.p},
                      {"K", rational_text(r.K)},
                      {"K_expected", rational_text(r.K_expected)},
                      {"K_matches", r.K == r.K_expected},
                      {"residual_max", r.residual_max},
                      {"census", pts},
                      {"saturated", r.census.saturated},
                      {"verdict", verdict_json(quantization_classify(r.spec))}}
                     .dump()
              << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lommel-type equations: evaluation, Wright zeros, contour counts and quantization checks"};
    app.require_subcommand(1);
    Output out;
    bool no_header = false;
    app.add_flag("--no-header", no_header, "omit the version header record");

    auto* eval = app.add_subcommand("eval", "evaluate J, Y, H1, H2 or the Lommel function S");
    std::string fn, nu = "0", mu = "0", zeta;
    std::optional<double> arg;
    int shift = 0;
    eval->add_option("--fn", fn, "besselj, bessely, hankel1, hankel2 or lommel")
        ->required()
        ->check(CLI::IsMember({"besselj", "bessely", "hankel1", "hankel2", "lommel"}));
    eval->add_option("--nu", nu, "order");
    eval->add_option("--mu", mu, "Lommel parameter mu");
    eval->add_option("--zeta", zeta, "point as a complex literal")->required();
    eval->add_option("--arg", arg, "unreduced argument, replacing the principal one");
    eval->add_option("--branch-shift", shift, "evaluate at zeta e^{-m pi i}");

    auto* wright = app.add_subcommand("wright", "seeds, boxes and refined zeros of z e^z = a");
    std::string a, n_range = "10";
    double tol = 1e-12;
    int j_max = 3;
    bool refine = false;
    wright->add_option("--a", a, "right-hand side a")->required();
    wright->add_option("--n", n_range, "index or range a:b");
    wright->add_option("--tol", tol, "Newton residual tolerance");
    wright->add_option("--j-max", j_max, "terms in the seed expansion")->check(CLI::Range(1, 3));
    wright->add_flag("--refine", refine, "refine each seed by Newton iteration");

    auto* census = app.add_subcommand("census", "zero counts inside contours, or the zero census of a solution");
    AuxOptions census_aux;
    SpecOptions census_spec;
    std::string radii = "2,3,4,5";
    bool solution = false;
    census_aux.add(census);
    census_spec.add(census);
    census->add_flag("--emit-contour", census_aux.emit_contour, "print the contour polyline as CSV");
    census->add_flag("--solution", solution, "count zeros of the assembled solution in discs");
    census->add_option("--radii", radii, "disc radii for --solution");

    auto* contour = app.add_subcommand("contour", "contour polyline as CSV");
    AuxOptions contour_aux;
    contour_aux.add(contour);

    auto* verify = app.add_subcommand("verify", "residual of the general equation on a z-grid");
    SpecOptions verify_spec;
    std::vector<std::string> zs;
    double h = 1e-3;
    verify_spec.add(verify);
    verify->add_option("--z", zs, "grid point (repeatable); default a 5 x 4 grid");
    verify->add_option("--fd-step", h, "finite-difference step");

    auto* quantize = app.add_subcommand("quantize", "predict finite or infinite exponent of convergence");
    SpecOptions quant_spec;
    bool as_table = false;
    int row = 1, p = 0;
    std::string sigma = "1";
    quant_spec.add(quantize);
    quantize->add_flag("--table1", as_table, "report a quantized table case instead");
    quantize->add_option("--case", row, "table row 1..4");
    quantize->add_option("--p", p, "table index p");
    quantize->add_option("--sigma", sigma, "right-hand coefficient for the table case");

    auto* table1 = app.add_subcommand("table1", "quantized table case report");
    table1->add_option("--case", row, "table row 1..4")->required();
    table1->add_option("--p", p, "table index p")->required();
    table1->add_option("--sigma", sigma, "right-hand coefficient");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    out.header = !no_header;

    try {
        if (eval->parsed()) return run_eval(fn, nu, mu, zeta, arg, shift, out);
        if (wright->parsed()) return run_wright(a, n_range, tol, j_max, refine, out);
        if (census->parsed()) {
            if (solution) return run_solution_census(census_spec, radii, out);
            return run_contours(census_aux, out, census_aux.emit_contour);
        }
        if (contour->parsed()) return run_contours(contour_aux, out, true);
        if (verify->parsed()) return run_verify(verify_spec, zs, h, out);
        if (quantize->parsed()) {
            if (as_table) return run_table1(row, p, sigma, out);
            SolutionSpec s = quant_spec.build();
            out.json_header("quantize");
            std::cout << verdict_json(quantization_classify(s)).dump() << '\n';
            return 0;
        }
        if (table1->parsed()) return run_table1(row, p, sigma, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << e.kind() << ": " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
