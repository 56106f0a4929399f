#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lommelq/branch.hpp"
#include "lommelq/wright.hpp"

namespace lommelq {

// Coefficients of C e^{i zeta} + D e^{-i zeta} + sigma zeta^{mu - 1/2}.
// b and phi are the polar form of 1/2 - mu.
struct AuxParams {
    Complex C_hat{1.0, 0.0};
    Complex D_hat{0.0, 0.0};
    Complex sigma_hat{1.0, 0.0};
    Complex mu{0.0, 0.0};
    double b = 0.5;
    double phi = 0.0;
};

AuxParams make_aux_params(Complex C_hat, Complex sigma_hat, Complex mu, Complex D_hat = {0.0, 0.0});

Complex aux_g(const AuxParams& p, const BranchPoint& z);
Complex aux_g_derivative(const AuxParams& p, const BranchPoint& z);
Complex aux_ghat(const AuxParams& p, Complex z);
Complex aux_ghat_derivative(const AuxParams& p, Complex z);

WrightTarget g_to_wright(const AuxParams& p);
// Image of a zero of z e^z = a on the sheet where it is a zero of g.
BranchPoint wright_zero_to_zeta(const AuxParams& p, Complex z);

enum class SegmentKind { Line, LogCurve, Arc };

// One parametric piece over t in [0, 1], before the contour rotation.
// Line: from a to b. LogCurve: scale*(d_r - i*coef*log r) with
// d_r = 2 m pi r^2 - alpha - pi, r running from r0 to r1. Arc: centre a,
// radius r0, angle from r1 to r1 + coef.
struct Segment {
    SegmentKind kind = SegmentKind::Line;
    Complex a, b;
    double scale = 1.0, m = 1.0, alpha = 0.0, coef = 0.0, r0 = 0.0, r1 = 0.0;

    Complex point(double t) const;
    Complex derivative(double t) const;
    std::string kind_name() const;

    static Segment line(Complex from, Complex to);
    static Segment log_curve(double scale, double m, double alpha, double coef, double r_from, double r_to);
    static Segment arc(Complex centre, double radius, double angle_from, double sweep);
};

struct Contour {
    std::vector<Segment> segments;
    double rotation = 0.0;
    int samples_per_segment = 64;

    Complex point(std::size_t seg, double t) const;
    Complex derivative(std::size_t seg, double t) const;
    // Unrotated argument plus the rotation, so powers follow the turned sheet.
    BranchPoint branch_point(std::size_t seg, double t) const;

    std::vector<Complex> polyline(int per_segment = 0) const;   // closed: last equals first
    double closure_defect() const;
    double winding_about(Complex p, int per_segment = 512) const;
    bool contains(Complex p, int per_segment = 512) const;
    double distance_to(Complex p, int per_segment = 512) const;
};

Contour build_square_contour(Complex centre, double half_width);
Contour build_circle_contour(Complex centre, double radius);

// Smallest m meeting both the subsequence hypothesis and the dominance
// inequality, or -1 if none up to the search limit.
long smallest_admissible_m(const AuxParams& p, long limit = 10000000);
bool dominance_holds(const AuxParams& p, long m);

Contour build_contour_omega_g(const AuxParams& p, long m, long k);

struct Rect {
    double u_lo, u_hi, v_lo, v_hi;
};
// Boxes holding the subsequence zeros, in unrotated coordinates.
std::vector<Rect> omega_g_rectangles(const AuxParams& p, long m, long k);

struct GhatZeroData {
    bool has_D = false;
    Complex Delta_plus_inv, Delta_minus_inv;   // D != 0
    Complex Delta_zero_inv;                    // D == 0
    double theta_plus = 0.0, theta_minus = 0.0, theta_zero = 0.0;
    double d = 1.0;
    bool equal_moduli = false;
};

struct GhatZero {
    long k = 0;
    char family = '0';   // '+', '-' or '0'
    Complex zeta;
    double residual = 0.0;
};

GhatZeroData ghat_zero_data(const AuxParams& p);
std::vector<GhatZero> ghat_zeros(const AuxParams& p, long k_lo, long k_hi);
Contour build_contour_omega_ghat(const AuxParams& p, long k, bool modified);

struct CountResult {
    long winding = 0;
    double raw_winding = 0.0;
    double min_abs_on_contour = 0.0;
    long samples = 0;
};

// Value and derivative at a point on a sheet.
using AnalyticFn = std::function<std::pair<Complex, Complex>(const BranchPoint&)>;
using ValueFn = std::function<Complex(const BranchPoint&)>;

struct CountOptions {
    double zero_distance = 1e-9;
    long max_samples = 1L << 20;
    double integer_tol = 1e-6;
    double stable_tol = 1e-8;
    double rel_noise = 1e-10;   // relative accuracy of f'/f along the contour
    int initial_pieces = 4;
};

CountResult count_zeros(const AnalyticFn& f, const Contour& c, const CountOptions& opt = {});
double rouche_margin(const ValueFn& f, const ValueFn& g, const Contour& c, int samples_per_segment = 2048);

} // namespace lommelq
