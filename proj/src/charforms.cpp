#include "cscalc/charforms.hpp"

#include "cscalc/errors.hpp"

namespace cscalc {

CurvatureData curvature_data(const MatrixForm& R, int kmax)
{
    CurvatureData d;
    d.n = R.n();
    d.m = R.chart_dim();
    d.pw = matrix_powers(R, kmax);
    d.tr = power_traces(d.pw);
    return d;
}

namespace {

// log(y/sinh(y)) resp. log(y/tanh(y)) with y = i R / (4 pi) resp. i R/(2 pi):
// even rational series in y, slot 2j picking up (-1)^j / scale^{2j} pi^{-2j}.
ZSeries hirzebruch_log(const RatSeries& unit_series, int kmax, int scale)
{
    RatSeries lg = series_log(unit_series, kmax);
    ZSeries f(kmax + 1, QSeries::zero());
    long s2 = (long)scale * scale;
    Rat pw(1);
    int sign = 1;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0 && k % 2 == 0) {
            pw /= s2;
            sign = -sign;
        }
        if (k % 2 == 0 && k < (int)lg.size() && !is_zero(lg[k]))
            f[k] = QSeries(Scalar::pi_term(-k, Cyclo24(Rat(sign) * pw * -lg[k])));
    }
    return f;
}

} // namespace

FormSeries a_hat(const CurvatureData& R)
{
    int kmax = R.m / 2;
    // -log(sinh(y)/y), y = iR/4pi
    ZSeries lf = hirzebruch_log(sinh_over_x_series(kmax), kmax, 4);
    return det_half_from_log(lf, R.tr);
}

FormSeries l_form(const CurvatureData& R)
{
    int kmax = R.m / 2;
    RatSeries t = tanh_inv_x_series(kmax); // x/tanh(x), unit
    // log(y/tanh y) directly: series_log of the unit series itself.
    RatSeries inv_unit = series_inv(t, kmax);
    ZSeries lf = hirzebruch_log(inv_unit, kmax, 2);
    return det_half_from_log(lf, R.tr);
}

namespace {

// exp(c * k * R) coefficients with c = i / (denom * pi).
ZSeries exp_series_scaled(int kmax, long kmul, int denom)
{
    ZSeries f(kmax + 1);
    Rat fac(1);
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0)
            fac *= rat(kmul, (long)denom * k); // (kmul/denom)^k / k!
        Cyclo24 ik = Cyclo24::zeta_pow(6L * k); // i^k
        f[k] = QSeries(Scalar::pi_term(-k, ik * Cyclo24(fac)));
    }
    return f;
}

} // namespace

FormSeries ch_form(const CurvatureData& R)
{
    return trace_of_series(exp_series_scaled(R.m / 2, 1, 2), R.tr, R.n);
}

FormSeries ch_tilde_form(const CurvatureData& R)
{
    return trace_of_series(exp_series_scaled(R.m / 2, 1, 1), R.tr, R.n);
}

ZSeries genus_log_R(GenusKind kind, int kmax, int N)
{
    WSeries lw = genus_log_w(kind, kmax, N);
    return zs_from_w(lw, Scalar::pi_term(-1, Cyclo24(Rat(1, 4))));
}

FormSeries phi_form(GenusKind kind, const CurvatureData& R, int N)
{
    return det_half_from_log(genus_log_R(kind, R.m / 2, N), R.tr);
}

FormSeries theta_bundle_ch(ThetaSector which, const CurvatureData& R, int N)
{
    const bool doubled = (which == ThetaSector::Theta1);
    const int kmax = R.m / 2;

    // Rank-normalized power sums tr[exp(k c R)] - n, c = i/(2 pi) or i/pi.
    auto pk_form = [&](long k) {
        ZSeries f = exp_series_scaled(kmax, k, doubled ? 1 : 2);
        f[0] = QSeries::zero();
        return trace_of_series(f, R.tr, R.n);
    };

    // q-grids: S_k = sum_n q^{nk}, H_k = sum_m q^{(m-1/2)k}, truncated at N.
    auto s_grid = [&](long k) {
        QSeries s = QSeries::zero(N);
        for (long n = 1; 24 * n * k < N; ++n)
            s += QSeries::monomial((int)(24 * n * k), Scalar(1), N);
        return s;
    };
    auto h_grid = [&](long k) {
        QSeries s = QSeries::zero(N);
        for (long mm = 1; (24 * mm - 12) * k < N; ++mm)
            s += QSeries::monomial((int)((24 * mm - 12) * k), Scalar(1), N);
        return s;
    };

    FormSeries log_ch(R.m);
    for (long k = 1; 12 * k < N; ++k) {
        QSeries coeff = QSeries::zero(N);
        switch (which) {
        case ThetaSector::Theta:
            coeff = s_grid(k);
            break;
        case ThetaSector::Theta2:
            coeff = s_grid(k) - h_grid(k);
            break;
        case ThetaSector::Theta3:
            coeff = (k % 2 == 1) ? s_grid(k) + h_grid(k) : s_grid(k) - h_grid(k);
            break;
        case ThetaSector::Theta1:
            // S_t and Lambda_t on the q^n grid combine to (1 + (-1)^{k+1}) S_k.
            if (k % 2 == 1)
                coeff = s_grid(k) + s_grid(k);
            break;
        }
        if (coeff.is_zero())
            continue;
        coeff = coeff.scaled(Scalar(Rat(1, k)));
        log_ch += pk_form(k).scaled(coeff);
    }
    // Force the q-truncation onto every slice (the rank term starts exact)
    // so downstream comparisons carry the same precision.
    return exp_nilpotent(log_ch).truncated(N);
}

FormSeries phi_form_via_bundles(GenusKind kind, const CurvatureData& R, int N)
{
    switch (kind) {
    case GenusKind::PhiL:
        return l_form(R) * theta_bundle_ch(ThetaSector::Theta1, R, N);
    case GenusKind::PhiW:
        return a_hat(R) * theta_bundle_ch(ThetaSector::Theta2, R, N);
    case GenusKind::PhiWPrime:
        return a_hat(R) * theta_bundle_ch(ThetaSector::Theta3, R, N);
    case GenusKind::PsiW:
        return a_hat(R) * theta_bundle_ch(ThetaSector::Theta, R, N);
    }
    throw CalcError("phi_form_via_bundles: bad kind");
}

FormSeries anomaly12_residual(const CurvatureData& R, const Rat& c32)
{
    if (R.m != 12)
        throw ShapeError("anomaly12_residual: chart dimension must be 12");
    FormSeries ahat = a_hat(R);
    FormSeries lhs = l_form(R).component(12);
    FormSeries rhs = (ahat * ch_form(R)).scaled(Rat(8)) - ahat.scaled(c32);
    return lhs - rhs.component(12);
}

} // namespace cscalc
