#pragma once

#include <optional>
#include <string>

#include "lommelq/bessel.hpp"
#include "lommelq/core_poly.hpp"

namespace lommelq {

struct LommelParams {
    Complex mu;
    Complex nu;
};

enum class DegeneracyTag { Generic, PlusOdd, MinusOdd, BothOdd, NegativeOdd };

// The three regimes of mu - nu' = -2p-1, where nu' is nu or -nu.
enum class NegativeCase { A, B, C };

struct DegeneracyClass {
    DegeneracyTag tag = DegeneracyTag::Generic;
    int p = 0;           // PlusOdd / MinusOdd / NegativeOdd
    int p_plus = 0;      // BothOdd
    int p_minus = 0;
    NegativeCase neg_case = NegativeCase::A;
    Complex nu_eff;      // order used by the negative-odd formulas
    int n = 0;           // case C: nu_eff = -n

    bool terminating() const {
        return tag == DegeneracyTag::PlusOdd || tag == DegeneracyTag::MinusOdd || tag == DegeneracyTag::BothOdd;
    }
    std::string to_string() const;
};

DegeneracyClass classify_degeneracy(const LommelParams& params, double tol = 1e-10);

// S = zeta^exponent * poly(1/zeta^2)
struct DegeneratePoly {
    Complex exponent;
    Poly poly;
    int p = 0;

    Complex operator()(const BranchPoint& z) const;
};

DegeneratePoly lommel_degenerate_poly(const LommelParams& params);

struct KConstants {
    std::optional<Complex> K, K_plus, Kp_plus, Kp_minus;   // empty when pole-limited
    Complex Kpp_plus, Kpp_minus;
    int m = 0;
};

KConstants k_constants(const LommelParams& params, int m);
Complex continuation_coeff_P(int m, const LommelParams& params);

EvalResult lommel_S_principal(const LommelParams& params, const BranchPoint& z);
EvalResult lommel_continued(const LommelParams& params, const BranchPoint& z_principal, int m);

// Any sheet: splits the argument and continues from the principal sheet.
EvalResult lommel_on_branch(const LommelParams& params, const BranchPoint& z);
EvalResult lommel_derivative_on_branch(const LommelParams& params, const BranchPoint& z);

// Individual evaluation routes. The series route works on any sheet by
// carrying the sheet through zeta^(mu+1) and the Bessel pair.
EvalResult lommel_series(const LommelParams& params, const BranchPoint& z);
EvalResult lommel_asymptotic(const LommelParams& params, const BranchPoint& z, int p);
EvalResult lommel_mu_mean(const LommelParams& params, const BranchPoint& z, int nodes = 48);

// Variation of parameters along the ray from anchor_modulus to z.
EvalResult lommel_S_quadrature(const LommelParams& params, const BranchPoint& z, double anchor_modulus = 1.0);

} // namespace lommelq
