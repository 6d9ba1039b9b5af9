#pragma once

#include "cscalc/matrixform.hpp"
#include "cscalc/theta.hpp"

namespace cscalc {

/// Shared per-curvature state: powers X^0..X^kmax and their traces.
struct CurvatureData {
    int n = 0, m = 0;
    std::vector<MatrixForm> pw;
    std::vector<FormSeries> tr;
};
CurvatureData curvature_data(const MatrixForm& R, int kmax);

/// det^{1/2}((iR/4pi)/sinh(iR/4pi)).
FormSeries a_hat(const CurvatureData& R);
/// det^{1/2}((iR/2pi)/tanh(iR/2pi)).
FormSeries l_form(const CurvatureData& R);
/// tr exp(iR/2pi), rank term included.
FormSeries ch_form(const CurvatureData& R);
/// tr exp(iR/pi) (doubled-argument Chern character).
FormSeries ch_tilde_form(const CurvatureData& R);

/// Log of the kind's generating function as a series in the matrix slot,
/// folded so that slot k is the coefficient of R^k (the w = R/4pi
/// substitution, with the doubled argument already inside for PhiL).
ZSeries genus_log_R(GenusKind kind, int kmax, int N);

/// Theta-function route: det^{1/2}(f_kind(R/4pi^2, tau)), normalized to 1 at
/// R = 0.
FormSeries phi_form(GenusKind kind, const CurvatureData& R, int N);

/// Plethystic route: ch of the Theta-sector tensor products of the
/// rank-normalized bundle, via log ch(Lambda_t/S_t) power sums. Theta1 uses
/// the doubled (modified) Chern character.
enum class ThetaSector { Theta1, Theta2, Theta3, Theta };
FormSeries theta_bundle_ch(ThetaSector which, const CurvatureData& R, int N);

/// The product route matching phi_form(kind): (L or A-hat) * ch(Theta_i).
FormSeries phi_form_via_bundles(GenusKind kind, const CurvatureData& R, int N);

/// 12-form residual {L}^{(12)} - {8 Ahat ch - c32 Ahat}^{(12)} on an m = 12
/// chart; identically zero at c32 = 32.
FormSeries anomaly12_residual(const CurvatureData& R, const Rat& c32 = Rat(32));

} // namespace cscalc
