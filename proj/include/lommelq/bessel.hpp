#pragma once

#include <string>

#include "lommelq/branch.hpp"

namespace lommelq {

enum class Method { Series, Asymptotic, Continuation, Polynomial, MuMean, Quadrature };

struct EvalResult {
    Complex value;
    double abs_err_est = 0.0;
    Method method = Method::Series;
    int detail = 0;   // terms kept for Asymptotic, branch index for Continuation

    std::string method_name() const;
};

// J and Y evaluated together at one point, with absolute error estimates.
struct BesselPair {
    Complex J, Y;
    double err_J = 0.0, err_Y = 0.0;
    Method method = Method::Series;
    int detail = 0;
};

struct BesselPairDerivative {
    BesselPair value;
    Complex dJ, dY;
    double err_dJ = 0.0, err_dY = 0.0;
};

struct HankelPair {
    Complex h1, h2;
    double err1 = 0.0, err2 = 0.0;
    Method method = Method::Series;
    int detail = 0;
};

BesselPair bessel_pair(Complex nu, const BranchPoint& z);
HankelPair hankel_pair(Complex nu, const BranchPoint& z);
BesselPairDerivative bessel_pair_derivative(Complex nu, const BranchPoint& z);

EvalResult bessel_j(Complex nu, const BranchPoint& z);
EvalResult bessel_y(Complex nu, const BranchPoint& z);
EvalResult hankel(int kind, Complex nu, const BranchPoint& z);

// p-term Hankel expansion, returned as H itself on the stated sectors.
EvalResult hankel_asymptotic(int kind, Complex nu, const BranchPoint& z, int p);

// Applies J(z e^{-m pi i}), Y(z e^{-m pi i}) in terms of values at z.
BesselPair continue_pair(Complex nu, const BesselPair& at, int m);

} // namespace lommelq
