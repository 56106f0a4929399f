#pragma once

#include "lommelq/branch.hpp"

namespace lommelq {

// Right-hand side of z e^z = a in polar form.
struct WrightTarget {
    Complex a;
    double A = 1.0;
    double alpha = 0.0;   // principal argument in (-pi, pi]
};

WrightTarget make_wright_target(Complex a);

// Asymptotic seed for the n-th non-principal zero.
struct ZeroSeed {
    long n = 0;
    double H = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double x = 0.0;
    double y = 0.0;
    bool valid = false;
    int j_max = 3;

    Complex z() const { return {x, y}; }
};

struct Box {
    double x_lo, x_hi, y_lo, y_hi;

    bool contains(Complex z) const {
        return z.real() > x_lo && z.real() < x_hi && z.imag() > y_lo && z.imag() < y_hi;
    }
};

struct RefinedZero {
    ZeroSeed seed;
    Complex z;
    double residual = 0.0;
    int iterations = 0;
};

bool wright_valid(const WrightTarget& target, long n);
ZeroSeed wright_seed(const WrightTarget& target, long n, int j_max = 3);
Box wright_bounds(const WrightTarget& target, long n);

// Subsequence n_k = -m k^2 for small |a|.
bool subseq_hypothesis(const WrightTarget& target, long m);
double subseq_d(const WrightTarget& target, long m, double r);
ZeroSeed wright_subseq_seed(const WrightTarget& target, long m, long k, int j_max = 3);
Box subseq_bounds(const WrightTarget& target, long m, long k);

Complex wright_residual(const WrightTarget& target, Complex z);
RefinedZero wright_refine(const WrightTarget& target, const ZeroSeed& seed, double tol = 1e-12);

} // namespace lommelq
