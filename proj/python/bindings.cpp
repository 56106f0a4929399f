#include <optional>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lommelq/bessel.hpp"
#include "lommelq/census.hpp"
#include "lommelq/errors.hpp"
#include "lommelq/lommel.hpp"
#include "lommelq/verify.hpp"
#include "lommelq/wright.hpp"

namespace py = pybind11;
using namespace lommelq;

namespace {

BranchPoint point(Complex zeta, std::optional<double> arg) {
    BranchPoint z = BranchPoint::principal(zeta);
    if (arg) z.arg = *arg;
    return z;
}

SolutionSpec make_spec(Complex A, Complex B, Complex nu, const std::vector<std::pair<Complex, Complex>>& terms,
                       Complex L, Complex M, Complex N) {
    SolutionSpec s;
    s.A = A;
    s.B = B;
    s.params.nu = nu;
    s.params.L = L;
    s.params.M = M;
    s.params.N = N;
    for (const auto& [sigma, mu] : terms) s.params.terms.push_back({sigma, mu});
    s.params.validate();
    return s;
}

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

py::dict census_dict(const CensusCurve& c) {
    py::list pts;
    for (const auto& p : c.points) pts.append(py::make_tuple(p.r, p.count));
    py::dict d;
    d["points"] = pts;
    d["lambda_estimate"] = c.lambda_estimate;
    d["lambda_infinite"] = c.lambda_infinite;
    d["saturated"] = c.saturated;
    return d;
}

} // namespace

PYBIND11_MODULE(_lommelq, m) {
    m.doc() = "Bessel, Lommel and Wright-zero evaluation with contour zero counting";

    py::register_exception<Error>(m, "Error");

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("abs_err_est", &EvalResult::abs_err_est)
        .def_property_readonly("method", &EvalResult::method_name)
        .def("__repr__", [](const EvalResult& r) {
            std::ostringstream os;
            os << "EvalResult(value=" << r.value << ", abs_err_est=" << r.abs_err_est << ", method=" << r.method_name()
               << ")";
            return os.str();
        });

    auto opt_arg = py::arg("arg") = py::none();
    m.def("bessel_j", [](Complex nu, Complex zeta, std::optional<double> arg) { return bessel_j(nu, point(zeta, arg)); },
          py::arg("nu"), py::arg("zeta"), opt_arg, "J_nu; arg replaces the principal argument of zeta");
    m.def("bessel_y", [](Complex nu, Complex zeta, std::optional<double> arg) { return bessel_y(nu, point(zeta, arg)); },
          py::arg("nu"), py::arg("zeta"), opt_arg);
    m.def("hankel",
          [](int kind, Complex nu, Complex zeta, std::optional<double> arg) { return hankel(kind, nu, point(zeta, arg)); },
          py::arg("kind"), py::arg("nu"), py::arg("zeta"), opt_arg);
    m.def("lommel_s",
          [](Complex mu, Complex nu, Complex zeta, std::optional<double> arg) {
              return lommel_on_branch({mu, nu}, point(zeta, arg));
          },
          py::arg("mu"), py::arg("nu"), py::arg("zeta"), opt_arg);
    m.def("classify", [](Complex mu, Complex nu) { return classify_degeneracy({mu, nu}).to_string(); }, py::arg("mu"),
          py::arg("nu"));

    m.def("wright_zero",
          [](Complex a, long n, double tol) {
              WrightTarget t = make_wright_target(a);
              ZeroSeed s = wright_seed(t, n);
              Box b = wright_bounds(t, n);
              RefinedZero r = wright_refine(t, s, tol);
              py::dict d;
              d["n"] = n;
              d["seed"] = s.z();
              d["box"] = py::make_tuple(b.x_lo, b.x_hi, b.y_lo, b.y_hi);
              d["zero"] = r.z;
              d["residual"] = r.residual;
              d["iterations"] = r.iterations;
              return d;
          },
          py::arg("a"), py::arg("n"), py::arg("tol") = 1e-12);

    m.def("ghat_zeros",
          [](Complex C, Complex sigma, Complex D, long k_lo, long k_hi) {
              py::list out;
              for (const auto& z : ghat_zeros(make_aux_params(C, sigma, 0.0, D), k_lo, k_hi))
                  out.append(py::make_tuple(z.k, std::string(1, z.family), z.zeta, z.residual));
              return out;
          },
          py::arg("C"), py::arg("sigma"), py::arg("D"), py::arg("k_lo"), py::arg("k_hi"));
    m.def("count_ghat",
          [](Complex C, Complex sigma, Complex D, long k, bool modified) {
              AuxParams p = make_aux_params(C, sigma, 0.0, D);
              AnalyticFn f = [p](const BranchPoint& z) {
                  Complex v = z.value();
                  return std::make_pair(aux_ghat(p, v), aux_ghat_derivative(p, v));
              };
              return count_zeros(f, build_contour_omega_ghat(p, k, modified)).winding;
          },
          py::arg("C"), py::arg("sigma"), py::arg("D"), py::arg("k"), py::arg("modified") = false);
    m.def("count_g",
          [](Complex C, Complex sigma, Complex mu, long k, std::optional<long> mm) {
              AuxParams p = make_aux_params(C, sigma, mu);
              long m_used = mm ? *mm : smallest_admissible_m(p);
              AnalyticFn f = [p](const BranchPoint& z) { return std::make_pair(aux_g(p, z), aux_g_derivative(p, z)); };
              return count_zeros(f, build_contour_omega_g(p, m_used, k)).winding;
          },
          py::arg("C"), py::arg("sigma"), py::arg("mu"), py::arg("k"), py::arg("m") = py::none());

    m.def("quantize",
          [](Complex A, Complex B, Complex nu, const std::vector<std::pair<Complex, Complex>>& terms, Complex L,
             Complex M, Complex N) {
              QuantizationVerdict v = quantization_classify(make_spec(A, B, nu, terms, L, M, N));
              py::list classes;
              for (const auto& c : v.per_term) classes.append(c.to_string());
              py::dict d;
              d["finite_lambda_predicted"] = v.finite_lambda_predicted;
              d["coefficients_vanish"] = v.coefficients_vanish;
              d["per_term"] = classes;
              return d;
          },
          py::arg("A"), py::arg("B"), py::arg("nu"), py::arg("terms"), py::arg("L") = Complex(1.0),
          py::arg("M") = Complex(1.0), py::arg("N") = Complex(0.0));
    m.def("zero_census",
          [](Complex A, Complex B, Complex nu, const std::vector<std::pair<Complex, Complex>>& terms,
             const std::vector<double>& radii, Complex L, Complex M, Complex N) {
              return census_dict(zero_census(make_spec(A, B, nu, terms, L, M, N), radii));
          },
          py::arg("A"), py::arg("B"), py::arg("nu"), py::arg("terms"), py::arg("radii"), py::arg("L") = Complex(1.0),
          py::arg("M") = Complex(1.0), py::arg("N") = Complex(0.0));
    m.def("table1",
          [](int row, int p, Complex sigma) {
              Table1Report r = table1_case(row, p, sigma);
              py::dict d;
              d["row"] = r.row;
              d["p"] = r.p;
              d["K"] = rational_text(r.K);
              d["K_expected"] = rational_text(r.K_expected);
              d["residual_max"] = r.residual_max;
              d["census"] = census_dict(r.census);
              return d;
          },
          py::arg("row"), py::arg("p"), py::arg("sigma") = Complex(1.0));
}
