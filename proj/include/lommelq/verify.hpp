#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lommelq/census.hpp"
#include "lommelq/core_poly.hpp"
#include "lommelq/lommel.hpp"

namespace lommelq {

struct Term {
    Complex sigma;
    Complex mu;
};

// f'' + 2N f' + [L^2 M^2 e^{2Mz} + (N^2 - nu^2 M^2)] f = sum sigma_j L^{mu_j+1} M^2 e^{[M(mu_j+1) - N] z}
struct OdeParams {
    Complex L{1.0, 0.0};
    Complex M{1.0, 0.0};
    Complex N{0.0, 0.0};
    Complex nu{0.0, 0.0};
    std::vector<Term> terms;

    void validate() const;   // ParamError on violated invariants
};

// f(z) = e^{-Nz} [A J + B Y + sum sigma_j S_{mu_j, nu}](L e^{Mz})
struct SolutionSpec {
    Complex A{0.0, 0.0};
    Complex B{0.0, 0.0};
    OdeParams params;
};

// Hankel-form coefficients C = (A - iB)/2, D = (A + iB)/2 and back.
std::pair<Complex, Complex> to_hankel_coefficients(Complex A, Complex B);
std::pair<Complex, Complex> from_hankel_coefficients(Complex C, Complex D);

// Point L e^{Mz} with the argument tracked continuously in z, shifted by
// -branch_shift * pi.
BranchPoint solution_zeta(const OdeParams& params, Complex z, int branch_shift = 0);

struct SolutionValue {
    Complex value;
    Complex derivative;
};

Complex assemble_solution(const SolutionSpec& spec, Complex z, int branch_shift = 0);
SolutionValue assemble_solution_with_derivative(const SolutionSpec& spec, Complex z, int branch_shift = 0);

// Value with first and second derivative in zeta.
struct Jet {
    Complex y, dy, d2y;
};
using ZetaJet = std::function<Jet(const BranchPoint&)>;

Jet degenerate_jet(const DegeneratePoly& poly, const BranchPoint& z);
Jet bessel_j_jet(Complex nu, const BranchPoint& z);
Jet bessel_y_jet(Complex nu, const BranchPoint& z);
Jet lommel_jet(const LommelParams& params, const BranchPoint& z);
// Sixth-order central differences along the real direction in zeta.
ZetaJet finite_difference_jet(std::function<Complex(const BranchPoint&)> f, double h = 1e-3);

// zeta^2 y'' + zeta y' + (zeta^2 - nu^2) y - sum sigma_j zeta^{mu_j + 1}
Complex ode_residual_zeta(Complex nu, const std::vector<Term>& rhs, const ZetaJet& y, const BranchPoint& zeta);
// Largest magnitude among the terms entering ode_residual_zeta.
double ode_residual_zeta_scale(Complex nu, const std::vector<Term>& rhs, const ZetaJet& y, const BranchPoint& zeta);

Complex ode_rhs_z(const OdeParams& params, Complex z);
Complex ode_residual_z(const SolutionSpec& spec, Complex z, double h = 1e-3);
// Largest magnitude among the right-hand side and the undifferentiated terms.
double ode_residual_z_scale(const SolutionSpec& spec, Complex z);

// Complex number with exact rational parts.
struct GaussRational {
    Rational re, im;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    bool is_zero() const { return re == 0 && im == 0; }
    Complex to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

// Coefficients of the residual of the terminating Lommel form with mu - nu
// or mu + nu equal to 2p+1, collected by power of zeta. All vanish exactly
// when the form solves the equation.
std::vector<GaussRational> degenerate_symbolic_residual(const GaussRational& mu, const GaussRational& nu, int p);

struct QuantizationVerdict {
    bool finite_lambda_predicted = false;
    std::vector<DegeneracyClass> per_term;
    bool coefficients_vanish = false;   // A = B = 0
};

QuantizationVerdict quantization_classify(const SolutionSpec& spec);

struct CensusPoint {
    double r;
    long count;
};

struct CensusCurve {
    std::vector<CensusPoint> points;
    double lambda_estimate = 0.0;
    bool lambda_infinite = false;
    bool saturated = false;   // equal counts at the last two radii
};

CensusCurve zero_census(const SolutionSpec& spec, const std::vector<double>& r_list);

struct Table1Report {
    int row = 1;
    int p = 0;
    Rational K;
    Rational K_expected;
    SolutionSpec spec;
    double residual_max = 0.0;
    CensusCurve census;
};

// K from the row formula, exactly.
Rational table1_K(int row, int p);
Table1Report table1_case(int row, int p, Complex sigma, const std::vector<double>& r_list = {3.0, 5.0, 7.0, 8.0});

} // namespace lommelq
