#pragma once

#include "cscalc/formseries.hpp"
#include "cscalc/theta.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cscalc {

using Cplx = std::complex<double>;

struct NumericConfig {
    int product_terms = 60;
    std::vector<Cplx> tau_samples = {{0.0, 2.0}, {1.0, 2.0}, {-0.5, 1.5}};
    std::vector<Cplx> v_samples = {{0.3, 0.1}, {-0.15, 0.2}};
    double tol = 1e-9;
};

struct ThetaVal {
    Cplx value;
    Cplx dv; // d/dv
};

/// Truncated-product evaluation with term-by-term analytic derivative.
/// Requires Im(tau) > 0; the tail is geometrically small in |q|.
ThetaVal theta_eval(ThetaKind kind, Cplx v, Cplx tau, const NumericConfig& cfg);

Cplx theta_prime0(Cplx tau, const NumericConfig& cfg);

/// Exact q-series evaluated at q = e^{2 pi i tau} with pi substituted
/// numerically.
Cplx eval_qseries(const QSeries& f, Cplx tau);

/// delta_i / eps_i at a numeric tau from the theta-null products.
Cplx delta_eval(int i, Cplx tau, const NumericConfig& cfg);
Cplx eps_eval(int i, Cplx tau, const NumericConfig& cfg);

struct LawCheck {
    std::string law;
    double residual = 0.0;
};

/// All S- and T-laws of the four theta functions, their differentiated
/// versions, theta'(0,-1/tau), the delta/eps weight laws, the Jacobi
/// identity, and the modular-group composition arithmetic used to reduce
/// generator words to S and T.
std::vector<LawCheck> check_transformations(const NumericConfig& cfg);

/// Max residual of lhs(tau_l) = factor * rhs(tau_r) over the degree-deg
/// form-basis coefficients, each evaluated from its exact q-expansion.
double form_slaw_residual(const FormSeries& lhs, Cplx tau_l, const FormSeries& rhs, Cplx tau_r,
                          Cplx factor, int deg);

} // namespace cscalc
