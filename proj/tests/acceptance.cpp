// Acceptance checks. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [known_failures.txt]
// Exit status is 0 when the failing criteria are exactly those listed as known.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lommelq/census.hpp"
#include "lommelq/core_poly.hpp"
#include "lommelq/errors.hpp"
#include "lommelq/lommel.hpp"
#include "lommelq/verify.hpp"
#include "lommelq/wright.hpp"

using namespace lommelq;

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Complex random_complex(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    double re = u(rng);
    return {re, u(rng)};
}

SolutionSpec single_term(Complex A, Complex B, Complex nu, Complex sigma, Complex mu) {
    SolutionSpec s;
    s.A = A;
    s.B = B;
    s.params.nu = nu;
    s.params.terms = {{sigma, mu}};
    return s;
}

GaussRational gr(long re_num, long re_den, long im_num = 0, long im_den = 1) {
    return {Rational(re_num) / Rational(re_den), Rational(im_num) / Rational(im_den)};
}

AnalyticFn ghat_fn(const AuxParams& p) {
    return [p](const BranchPoint& z) {
        Complex v = z.value();
        return std::make_pair(aux_ghat(p, v), aux_ghat_derivative(p, v));
    };
}

AnalyticFn g_fn(const AuxParams& p) {
    return [p](const BranchPoint& z) { return std::make_pair(aux_g(p, z), aux_g_derivative(p, z)); };
}

Outcome degenerate_residual() {
    Outcome o;
    const GaussRational nus[] = {gr(0, 1), gr(1, 2), gr(-1, 2), gr(1, 1), gr(-1, 1), gr(3, 10, 1, 10)};
    double worst = 0.0;
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> mod(0.5, 10.0), ang(-pi, pi);
    std::vector<BranchPoint> pts;
    for (int i = 0; i < 50; ++i) pts.push_back({mod(rng), ang(rng)});
    for (const auto& nu : nus) {
        for (int p = 0; p <= 5; ++p) {
            GaussRational odd{Rational(2 * p + 1), Rational(0)};
            for (const auto& mu : {nu + odd, odd - nu}) {
                for (const auto& c : degenerate_symbolic_residual(mu, nu, p))
                    o.require(c.is_zero(), "symbolic residual is not zero");
                Complex mu_c = mu.to_complex(), nu_c = nu.to_complex();
                DegeneratePoly poly = lommel_degenerate_poly({mu_c, nu_c});
                ZetaJet jet = [&poly](const BranchPoint& z) { return degenerate_jet(poly, z); };
                std::vector<Term> rhs{{1.0, mu_c}};
                for (const auto& z : pts) {
                    double r = std::abs(ode_residual_zeta(nu_c, rhs, jet, z)) / ode_residual_zeta_scale(nu_c, rhs, jet, z);
                    worst = std::max(worst, r);
                }
            }
        }
    }
    o.require(worst <= 1e-12, "numeric residual " + fmt("%.2e", worst));
    if (o.pass) o.detail = "max relative residual " + fmt("%.2e", worst);
    return o;
}

Outcome wright_seeds() {
    Outcome o;
    int checked = 0, worst_iter = 0;
    double worst_res = 0.0;
    for (Complex a : {Complex(1.0), std::polar(2.0, pi / 3.0), Complex(0.5, -0.2)}) {
        WrightTarget t = make_wright_target(a);
        for (long an = 10; an <= 200; ++an) {
            for (long n : {an, -an}) {
                ZeroSeed s = wright_seed(t, n);
                if (!s.valid) continue;
                Box box = wright_bounds(t, n);
                o.require(box.contains(s.z()), "seed outside its box at n = " + std::to_string(n));
                RefinedZero r = wright_refine(t, s, 1e-12);
                worst_res = std::max(worst_res, r.residual);
                worst_iter = std::max(worst_iter, r.iterations);
                o.require(box.contains(r.z), "refined zero outside its interval at n = " + std::to_string(n));
                ++checked;
            }
        }
    }
    o.require(worst_res <= 1e-12, "Newton residual " + fmt("%.2e", worst_res));
    o.require(worst_iter <= 12, "iterations " + std::to_string(worst_iter));
    o.require(checked > 0, "no valid seeds");
    if (o.pass)
        o.detail = std::to_string(checked) + " seeds, max residual " + fmt("%.1e", worst_res) + ", max iterations " +
                   std::to_string(worst_iter);
    return o;
}

Outcome subsequence() {
    Outcome o;
    WrightTarget t = make_wright_target(1e-3);
    o.require(subseq_hypothesis(t, 1), "hypothesis fails for A = 1e-3, m = 1");
    int inside = 0;
    for (long k = 20; k <= 40; ++k) {
        RefinedZero r = wright_refine(t, wright_subseq_seed(t, 1, k));
        double x = r.z.real(), y = r.z.imag(), kd = double(k);
        bool ok = x > -5.0 * std::log(kd) && x < -2.0 * std::log(kd) - 2.0 && y > -subseq_d(t, 1, kd + 1.0) &&
                  y < -subseq_d(t, 1, kd);
        o.require(ok, "k = " + std::to_string(k) + " outside its rectangle");
        inside += ok ? 1 : 0;
    }
    if (o.pass) o.detail = std::to_string(inside) + "/21 inside";
    return o;
}

Outcome ghat_counts() {
    Outcome o;
    std::mt19937_64 rng(99);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        Complex C = random_complex(rng, -2.0, 2.0);
        Complex D = i % 4 == 0 ? Complex(0.0) : random_complex(rng, -2.0, 2.0);
        Complex s = random_complex(rng, -3.0, 3.0);
        auto p = make_aux_params(C, s, 0.0, D);
        for (const auto& z : ghat_zeros(p, 0, 3)) {
            double scale = std::abs(C * std::exp(I * z.zeta)) + std::abs(D * std::exp(-I * z.zeta)) + std::abs(s);
            worst = std::max(worst, z.residual / std::max(1.0, scale));
        }
    }
    o.require(worst <= 1e-12, "closed-form residual " + fmt("%.2e", worst));

    std::string unmod = "unmodified", mod = "modified";
    auto pd = make_aux_params(1.0, Complex(2.5, 0.3), 0.0, Complex(0.7, -0.2));
    o.require(!ghat_zero_data(pd).equal_moduli, "unmodified example has equal moduli");
    for (long k = 2; k <= 6; ++k) {
        long w = count_zeros(ghat_fn(pd), build_contour_omega_ghat(pd, k, false)).winding;
        unmod += " " + std::to_string(w);
        o.require(w == k + 1, "unmodified count " + std::to_string(w) + " at k = " + std::to_string(k) + ", expected " +
                                  std::to_string(k + 1));
    }
    Complex x1 = std::polar(1.3, 0.3), x2 = std::polar(1.3, 2.0);
    auto pe = make_aux_params(1.0, -(x1 + x2), 0.0, x1 * x2);
    for (long k = 2; k <= 6; ++k) {
        long w = count_zeros(ghat_fn(pe), build_contour_omega_ghat(pe, k, true)).winding;
        mod += " " + std::to_string(w);
        o.require(w == 2 * k + 1, "modified count " + std::to_string(w) + " at k = " + std::to_string(k) +
                                      ", expected " + std::to_string(2 * k + 1));
    }
    o.detail += (o.detail.empty() ? "" : "; ") + unmod + "; " + mod + "; residual " + fmt("%.1e", worst);
    return o;
}

Outcome g_counts() {
    Outcome o;
    auto p = make_aux_params(1.0, 50.0, 2.0);
    long m = smallest_admissible_m(p);
    o.require(m > 0, "no admissible m");
    std::string counts = "m = " + std::to_string(m) + ", counts";
    for (long k = 3; k <= 8 && o.pass; ++k) {
        long w = count_zeros(g_fn(p), build_contour_omega_g(p, m, k)).winding;
        counts += " " + std::to_string(w);
        o.require(w >= k, "count " + std::to_string(w) + " below k = " + std::to_string(k));
    }
    o.detail += (o.detail.empty() ? "" : "; ") + counts;
    return o;
}

Outcome continuation() {
    Outcome o;
    std::mt19937_64 rng(5);
    double worst_p = 0.0;
    int drawn = 0;
    while (drawn < 1000) {
        LommelParams prm{random_complex(rng, -3.0, 3.0), random_complex(rng, -2.0, 2.0)};
        if (classify_degeneracy(prm, 0.05).tag != DegeneracyTag::Generic) continue;
        worst_p = std::max({worst_p, std::abs(continuation_coeff_P(0, prm)), std::abs(continuation_coeff_P(-1, prm))});
        ++drawn;
    }
    o.require(worst_p <= 1e-14, "P_0 or P_-1 = " + fmt("%.2e", worst_p));

    BranchPoint z{2.3, 0.7};
    std::set<std::string> kinds;
    for (LommelParams prm : {LommelParams{1.3, 0.4}, LommelParams{3.4, 0.4}, LommelParams{2.6, 0.4},
                             LommelParams{3.0, 0.0}, LommelParams{0.37 - 3.0, 0.37}, LommelParams{-3.0, 0.0},
                             LommelParams{-4.0, 1.0}, LommelParams{-4.0, -1.0}}) {
        kinds.insert(classify_degeneracy(prm).to_string());
        o.require(lommel_continued(prm, z, 0).value == lommel_S_principal(prm, z).value,
                  "m = 0 continuation changes " + classify_degeneracy(prm).to_string());
    }

    double worst_rot = 0.0;
    // mu - nu odd; the mu + nu odd forms follow by evenness in nu
    for (LommelParams prm : {LommelParams{3.0, 0.0}, LommelParams{Complex(3.3, 0.1), Complex(0.3, 0.1)},
                             LommelParams{5.5, 0.5}, LommelParams{Complex(6.2, -0.4), Complex(1.2, -0.4)}}) {
        for (const auto& zz : {BranchPoint{1.7, 0.4}, BranchPoint{6.0, -2.0}}) {
            EvalResult base = lommel_S_principal(prm, zz);
            for (int m = -4; m <= 4; ++m) {
                Complex rotated = lommel_on_branch(prm, zz.rotated(-m * pi)).value;
                Complex want = std::exp(-double(m) * prm.nu * pi * I) * base.value;
                worst_rot = std::max(worst_rot, std::abs(rotated - want) / std::abs(want));
            }
        }
    }
    o.require(worst_rot <= 1e-10, "rotation identity " + fmt("%.2e", worst_rot));
    if (o.pass)
        o.detail = "max |P| " + fmt("%.1e", worst_p) + ", " + std::to_string(kinds.size()) +
                   " dispatch classes, rotation " + fmt("%.1e", worst_rot);
    return o;
}

Outcome hankel_order() {
    Outcome o;
    // reference H^(1) values at 30 and 60 on the positive axis
    struct Ref {
        double nu;
        Complex h30, h60;
    };
    const Ref refs[] = {
        {0.0, {-0.086367983581040211, -0.11729573168666403}, {-0.09147180408906187, 0.047358952209449399}},
        {1.0 / 3.0, {-0.13334053387426162, -0.058645772316705079}, {-0.055618147270528143, 0.086699173295718002}},
        {0.5, {-0.14392965337039989, -0.022470290598831025}, {-0.031397461182520413, 0.098104683735037915}},
    };
    std::string ratios = "ratios";
    for (const auto& r : refs) {
        for (int p : {2, 4, 6}) {
            double e30 = std::abs(hankel_asymptotic(1, r.nu, {30.0, 0.0}, p).value - r.h30) / std::abs(r.h30);
            double e60 = std::abs(hankel_asymptotic(1, r.nu, {60.0, 0.0}, p).value - r.h60) / std::abs(r.h60);
            if (r.nu == 0.5) {
                // the expansion terminates after one term; only rounding remains
                o.require(e30 <= 1e-14 && e60 <= 1e-14, "order 1/2 expansion is not exact");
                continue;
            }
            double ratio = e30 / e60, target = std::pow(2.0, p);
            ratios += " " + fmt("%.1f", ratio);
            o.require(ratio > target / 2.0 && ratio < target * 2.0,
                      "ratio " + fmt("%.2f", ratio) + " at p = " + std::to_string(p));
        }
    }
    if (o.pass) o.detail = ratios + " (nu = 0, 1/3); nu = 1/2 exact to rounding";
    return o;
}

Outcome table_cases() {
    Outcome o;
    double worst = 0.0;
    for (int row = 1; row <= 4; ++row) {
        for (int p = 0; p <= 2; ++p) {
            Table1Report r = table1_case(row, p, 1.0);
            std::string tag = "row " + std::to_string(row) + ", p = " + std::to_string(p);
            o.require(r.K == r.K_expected, tag + ": K mismatch");
            o.require(r.residual_max <= 1e-7, tag + ": residual " + fmt("%.2e", r.residual_max));
            o.require(r.census.saturated, tag + ": census does not saturate");
            worst = std::max(worst, r.residual_max);
        }
    }
    if (o.pass) o.detail = "12 cases, max residual " + fmt("%.1e", worst);
    return o;
}

std::string counts_text(const CensusCurve& c) {
    std::string s;
    for (const auto& p : c.points) s += (s.empty() ? "" : ",") + std::to_string(p.count);
    return s;
}

Outcome dichotomy() {
    Outcome o;
    const std::vector<double> radii{2.0, 3.0, 4.0, 5.0};
    std::string flat = "terminating", grow = "oscillating";
    for (const auto& s : {single_term(0.0, 0.0, 0.0, 1.0, 3.0), single_term(0.0, 0.0, 0.5, 1.0, 2.5),
                          single_term(0.0, 0.0, 0.0, 1.0, 5.0), single_term(0.0, 0.0, 1.0, 1.0, 4.0),
                          single_term(0.0, 0.0, 1.0, 1.0, 6.0)}) {
        CensusCurve c = zero_census(s, radii);
        flat += " [" + counts_text(c) + "]";
        o.require(c.points[2].count == c.points[3].count, "terminating counts " + counts_text(c) + " still grow");
    }
    for (const auto& s : {single_term(1.0, 0.0, 0.0, 1.0, 3.0), single_term(1.0, 0.5, 0.5, 1.0, 1.3),
                          single_term(0.0, 1.0, 1.0, 2.0, 2.0), single_term(Complex(0.3, 0.4), 0.0, 0.25, 1.0, 1.5),
                          single_term(1.0, 0.0, 0.0, 1.0, -2.5)}) {
        CensusCurve c = zero_census(s, radii);
        grow += " [" + counts_text(c) + "]";
        bool increasing = true;
        for (std::size_t i = 1; i < c.points.size(); ++i) increasing &= c.points[i].count > c.points[i - 1].count;
        const auto& pts = c.points;
        bool ratio = pts[3].count >= 2 * pts[2].count;
        o.require(increasing && ratio, "oscillating counts " + counts_text(c));
    }
    o.detail += (o.detail.empty() ? "" : "; ") + flat + "; " + grow;
    return o;
}

Outcome d_degrees() {
    Outcome o;
    std::string degs = "degrees";
    for (int n = 1; n <= 10; ++n) {
        auto [plus, minus] = d_polys(n);
        int d = std::max(plus.degree(), minus.degree());
        degs += " " + std::to_string(d);
        o.require(d == n, "degree " + std::to_string(d) + " at n = " + std::to_string(n));
    }
    if (o.pass) o.detail = degs;
    return o;
}

std::set<int> read_known(const char* path) {
    std::set<int> out;
    if (!path) return out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int id;
        if (line.empty() || line[0] == '#') continue;
        if (ls >> id) out.insert(id);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_s;   // 0 for no limit
    };
    const std::vector<Criterion> all = {
        {1, "degenerate Lommel residual", degenerate_residual, 2.0},
        {2, "Wright seeds and refinement", wright_seeds, 5.0},
        {3, "subsequence zeros for small a", subsequence, 0.0},
        {4, "ghat zeros and contour counts", ghat_counts, 0.0},
        {5, "g contour counts", g_counts, 60.0},
        {6, "continuation identities", continuation, 0.0},
        {7, "Hankel truncation order", hankel_order, 0.0},
        {8, "quantized table cases", table_cases, 0.0},
        {9, "oscillation dichotomy", dichotomy, 0.0},
        {10, "degrees of D polynomials", d_degrees, 0.0},
    };
    std::set<int> known = read_known(argc > 1 ? argv[1] : nullptr);
    int unexpected = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0 && secs > c.budget_s) o.require(false, "runtime " + fmt("%.2f s", secs) + " over budget");
        bool is_known = known.count(c.id) > 0;
        std::string note;
        if (!o.pass && is_known) note = " (known failure)";
        if (o.pass && is_known) note = " (listed as known failure but passes)";
        if (o.pass == is_known) ++unexpected;
        std::printf("%s %d %s [%.2f s]: %s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str(),
                    note.c_str());
        std::fflush(stdout);
    }
    return unexpected == 0 ? 0 : 1;
}
