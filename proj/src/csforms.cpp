#include "cscalc/csforms.hpp"

#include "cscalc/errors.hpp"

namespace cscalc {

KindConvention kind_convention(GenusKind kind)
{
    KindConvention c;
    if (kind == GenusKind::PhiL) {
        c.prefactor = Scalar::pi_term(-2, Cyclo24(Rat(1, 4)));
        c.z_per_R = Scalar::pi_term(-2, Cyclo24(Rat(1, 2)));
        c.logderiv = BracketKind::Theta1;
    } else {
        c.prefactor = Scalar::pi_term(-2, Cyclo24(Rat(1, 8)));
        c.z_per_R = Scalar::pi_term(-2, Cyclo24(Rat(1, 4)));
        if (kind == GenusKind::PhiW)
            c.logderiv = BracketKind::Theta2;
        else if (kind == GenusKind::PhiWPrime)
            c.logderiv = BracketKind::Theta3;
        else
            c.logderiv = std::nullopt;
    }
    return c;
}

ZSeries cs_bracket_R(GenusKind kind, int kmax, int N)
{
    KindConvention c = kind_convention(kind);
    WSeries b = theta_logderiv(BracketKind::ThetaReg, kmax, N);
    if (c.logderiv)
        b += theta_logderiv(*c.logderiv, kmax, N);
    return zs_from_w(b, c.z_per_R);
}

namespace {

CsResult cs_form_with(GenusKind kind, const MatrixForm& A, const CurvatureData& data, int m,
                      int N)
{
    KindConvention c = kind_convention(kind);
    FormSeries phi_t = det_half_from_log(genus_log_R(kind, m / 2, N), data.tr);
    FormSeries br = bracket_trace(cs_bracket_R(kind, (m - 1) / 2, N), A, data.pw);
    FormSeries integrand = phi_t * br;

    CsResult r;
    r.kind = kind;
    r.trunc = N;
    r.form = integrand.scaled(c.prefactor).integrate_t01();
    return r;
}

} // namespace

CsResult cs_form(GenusKind kind, const ConnectionPair& pair, int N)
{
    MatrixForm A = pair.difference();
    CurvatureData data = curvature_data(curvature_family(pair), pair.m / 2);
    return cs_form_with(kind, A, data, pair.m, N);
}

FormSeries phi_endpoint(GenusKind kind, const MatrixForm& A, int m, int N)
{
    CurvatureData data = curvature_data(curvature(A), m / 2);
    return phi_form(kind, data, N);
}

FormSeries transgression_residual(GenusKind kind, const ConnectionPair& pair, int N)
{
    CsResult cs = cs_form(kind, pair, N);
    FormSeries rhs = phi_endpoint(kind, pair.A1, pair.m, N) -
                     phi_endpoint(kind, pair.A0, pair.m, N);
    return cs.form.d() - rhs;
}

std::array<FormSeries, 3> dim3_residuals(const ConnectionPair& pair, int N)
{
    if (pair.m != 3)
        throw ShapeError("dim3_residuals: chart dimension must be 3");
    if (!pair.A0.is_zero())
        throw CalcError("dim3_residuals: A0 must be the trivial connection");
    ModularFormTable table = modular_table(N);
    FormSeries cs_a = cs_classic(pair.A1);

    std::array<FormSeries, 3> res;
    const GenusKind kinds[3] = {GenusKind::PhiL, GenusKind::PhiW, GenusKind::PhiWPrime};
    const QSeries* deltas[3] = {&table.delta[0], &table.delta[1], &table.delta[2]};
    const Rat denom[3] = {Rat(-1, 6), Rat(-1, 24), Rat(-1, 24)};
    for (int i = 0; i < 3; ++i) {
        CsResult cs = cs_form(kinds[i], pair, N);
        FormSeries rhs =
            cs_a.scaled(deltas[i]->scaled(Scalar::pi_term(-2, Cyclo24(denom[i]))));
        res[i] = cs.form - rhs;
    }
    return res;
}

QSeries dim3_scalar_residual(int N)
{
    WSeries b = theta_logderiv(BracketKind::ThetaReg, 1, N) +
                theta_logderiv(BracketKind::Theta1, 1, N);
    ModularFormTable table = modular_table(N);
    return b[1] + table.delta[0].scaled(Scalar::pi_term(2, Cyclo24(Rat(8, 3))));
}

FormSeries form_tshift(const FormSeries& f)
{
    FormSeries r(f.chart_dim());
    for (const auto& [k, q] : f.terms())
        r.add_term(k.mask, k.mono, q.tshifted());
    return r;
}

bool TshiftReport::all_zero() const
{
    return w_to_wp.is_zero() && wp_to_w.is_zero() && l_fixed.is_zero() && phi_level.is_zero();
}

TshiftReport tshift_relations(const ConnectionPair& pair, int N)
{
    MatrixForm A = pair.difference();
    CurvatureData data = curvature_data(curvature_family(pair), pair.m / 2);
    CsResult w = cs_form_with(GenusKind::PhiW, A, data, pair.m, N);
    CsResult wp = cs_form_with(GenusKind::PhiWPrime, A, data, pair.m, N);
    CsResult l = cs_form_with(GenusKind::PhiL, A, data, pair.m, N);

    TshiftReport rep;
    rep.w_to_wp = form_tshift(w.form) - wp.form;
    rep.wp_to_w = form_tshift(wp.form) - w.form;
    rep.l_fixed = form_tshift(l.form) - l.form;

    CurvatureData r1 = curvature_data(curvature(pair.A1), pair.m / 2);
    rep.phi_level = form_tshift(phi_form(GenusKind::PhiW, r1, N)) -
                    phi_form(GenusKind::PhiWPrime, r1, N);
    return rep;
}

namespace {

// Odd kernel (1/(2R))*(1 - u(R/scale)) as a series in R, where u is a unit
// rational series. Slot 2j-1 carries pi^{-2j} from the argument scaling by
// s*pi.
ZSeries half_pole_kernel(const RatSeries& unit, int kmax, const Rat& s)
{
    ZSeries f(kmax + 1, QSeries::zero());
    Rat spow(1);
    for (int k = 1; k <= kmax + 1 && k < (int)unit.size(); ++k) {
        // coefficient of R^{k-1} in (1 - u(R/(s pi)))/(2R)
        spow *= s;
        if (k % 2 == 0 && !is_zero(unit[k]))
            f[k - 1] = QSeries(Scalar::pi_term(-k, Cyclo24(-unit[k] / (2 * spow))));
    }
    return f;
}

// -(1/2pi) sin(R/(2pi)) as a series in R.
ZSeries sin_kernel(int kmax)
{
    RatSeries s = sin_series(kmax + 1);
    ZSeries f(kmax + 1, QSeries::zero());
    Rat spow(1); // 2^{k}
    for (int k = 1; k <= kmax; ++k) {
        spow *= 2;
        if (k % 2 == 1 && !is_zero(s[k]))
            f[k] = QSeries(Scalar::pi_term(-(k + 1), Cyclo24(-s[k] / (2 * spow))));
    }
    return f;
}

FormSeries integral_11(const FormSeries& weight, const ZSeries& kernel, const MatrixForm& A,
                       const CurvatureData& data)
{
    FormSeries integrand = weight * bracket_trace(kernel, A, data.pw);
    return integrand.integrate_t01().component(11);
}

} // namespace

ElevenLedger eleven_dim_ledger(const ConnectionPair& pair, int N, const Rat& interior,
                               const Rat& c3)
{
    if (pair.m != 11)
        throw ShapeError("eleven_dim_ledger: chart dimension must be 11");
    MatrixForm A = pair.difference();
    MatrixForm Rt = curvature_family(pair);
    CurvatureData data = curvature_data(Rt, 5);

    // K_A(R) = 1/(2R) - cot(R/4pi)/(8pi): x*cot(x) = cos(x)/(sinh... sin(x)/x).
    const int kmax = 5;
    RatSeries xcot = series_div(cos_series(kmax + 2), [&] {
        RatSeries s = sin_series(kmax + 2);
        RatSeries sx(s.size() - 1);
        for (size_t i = 1; i < s.size(); ++i)
            sx[i - 1] = s[i];
        return sx;
    }(), kmax + 2);
    ZSeries kernel_a = half_pole_kernel(xcot, kmax, Rat(4));

    // L-kernel: 1/(2R) - csc(R/pi)/(2pi): x*csc(x) = 1/(sin(x)/x).
    RatSeries xcsc = series_inv([&] {
        RatSeries s = sin_series(kmax + 2);
        RatSeries sx(s.size() - 1);
        for (size_t i = 1; i < s.size(); ++i)
            sx[i - 1] = s[i];
        return sx;
    }(), kmax + 2);
    ZSeries kernel_l = half_pole_kernel(xcsc, kmax, Rat(1));

    ZSeries kernel_sin = sin_kernel(kmax);

    FormSeries ahat_t = a_hat(data);
    FormSeries ch_t = ch_form(data);
    FormSeries l_t = l_form(data);

    FormSeries p_ahat_k = integral_11(ahat_t, kernel_a, A, data);
    FormSeries p_ahat_ch_k = integral_11(ahat_t * ch_t, kernel_a, A, data);
    FormSeries p_ahat_sin = integral_11(ahat_t, kernel_sin, A, data);
    FormSeries p_l = integral_11(l_t, kernel_l, A, data);

    ElevenLedger led;
    led.z0 = -p_ahat_k;
    led.z1 = p_ahat_ch_k + p_ahat_sin + p_ahat_k.scaled(interior);
    led.ahat_kernel_integral = p_ahat_k;

    ModularFormTable table = modular_table(N);
    QSeries d2_8 = table.delta[1].scaled(Scalar(Rat(8)));
    QSeries d1_8 = table.delta[0].scaled(Scalar(Rat(8)));

    FormSeries cs_w = cs_form_with(GenusKind::PhiW, A, data, 11, N).form.component(11);
    FormSeries cs_l = cs_form_with(GenusKind::PhiL, A, data, 11, N).form.component(11);

    led.residual_a = cs_w - led.z0.scaled(d2_8.pow(3)) - led.z1.scaled(d2_8 * table.eps[1]);
    led.residual_b = cs_l - (led.z0.scaled(d1_8.pow(3)) + led.z1.scaled(d1_8 * table.eps[0]))
                                .scaled(Rat(64));
    led.residual_c = p_l - p_ahat_ch_k - p_ahat_sin - p_ahat_k.scaled(c3);

    if (!led.residual_a.is_zero() && !p_ahat_k.is_zero()) {
        // Recover the interior constant that the decomposition implies:
        // residual_a(alpha) = residual_a - (alpha - interior) p_ahat_k (8 d2) eps2.
        FormSeries unit = p_ahat_k.scaled(d2_8 * table.eps[1]);
        for (const auto& [key, q] : unit.terms()) {
            if (q.is_zero())
                continue;
            auto it = led.residual_a.terms().find(key);
            if (it == led.residual_a.terms().end())
                continue;
            for (const auto& [k, c] : q.terms()) {
                const Scalar& rc = it->second.coeff(k);
                if (!c.is_zero() && !rc.is_zero() && c.is_monomial() && rc.is_monomial()) {
                    Scalar ratio = rc * c.inverse();
                    if (ratio.is_rational()) {
                        led.fitted_interior = interior + ratio.rational_part();
                        return led;
                    }
                }
            }
        }
    }
    return led;
}

bool FlatReport::ok() const
{
    return rt_matches && traces_vanish && dethalf_is_one && e4_residual.is_zero() &&
           psi_tshift_residual.is_zero();
}

FlatReport flat_suite(const ConnectionPair& pair, int N)
{
    if (!pair.claims_flat)
        throw FlatnessViolation("flat_suite: pair does not claim flatness");
    MatrixForm A = pair.difference();
    MatrixForm Rt = curvature_family(pair);

    FlatReport rep;

    // R_t = (t^2 - t) A ^ A; flatness of both endpoints forces
    // [nabla_0, A] = -A ^ A, so this holds for every flat pair.
    MatrixForm awa = A * A;
    rep.rt_matches = (Rt - (awa.times_t(2) - awa.times_t(1))).is_zero();

    CurvatureData data = curvature_data(Rt, pair.m / 2);
    rep.traces_vanish = true;
    for (size_t k = 1; k < data.tr.size(); ++k)
        if (!data.tr[k].is_zero())
            rep.traces_vanish = false;

    FormSeries dethalf = det_half_from_log(genus_log_R(GenusKind::PsiW, pair.m / 2, N), data.tr);
    rep.dethalf_is_one = (dethalf == FormSeries::constant(pair.m, QSeries::one(N)));

    CsResult psi = cs_form(GenusKind::PsiW, pair, N);
    rep.psi_tshift_residual = form_tshift(psi.form) - psi.form;

    auto apw = matrix_powers(A, 7);
    rep.tr_a7_nonzero = apw.size() > 7 && !apw[7].trace().is_zero();

    rep.e4_residual = FormSeries(pair.m);
    if (pair.m == 7) {
        ModularFormTable table = modular_table(N);
        FormSeries tr_a7 = apw.size() > 7 ? apw[7].trace() : FormSeries(pair.m);
        FormSeries rhs = tr_a7.scaled(
            table.e4.scaled(Scalar::pi_term(-4, Cyclo24(Rat(-1, 3225600)))));
        rep.e4_residual = psi.form.component(7) - rhs;
    }

    // Quasimodular weight-2 witness: the z^1 coefficient of the regularized
    // bracket, normalized by its q^0 value pi^2/3.
    WSeries b = theta_logderiv(BracketKind::ThetaReg, 1, N);
    rep.weight2_witness = b[1].scaled(Scalar::pi_term(-2, Cyclo24(Rat(3))));
    return rep;
}

FormSeries loop_cs(LoopBundle which, const ConnectionPair& pair, int N)
{
    if (!pair.claims_flat)
        throw FlatnessViolation("loop_cs: flat pair required");
    MatrixForm A = pair.difference();
    MatrixForm Rt = curvature_family(pair);
    CurvatureData data = curvature_data(Rt, pair.m / 2);

    BracketKind bk = (which == LoopBundle::V) ? BracketKind::Theta2 : BracketKind::Theta3;
    ThetaKind tk = (which == LoopBundle::V) ? ThetaKind::Theta2 : ThetaKind::Theta3;
    Scalar z_per_R = Scalar::pi_term(-2, Cyclo24(Rat(1, 4)));

    // det^{1/2}(theta_k(R_t/4pi^2)/theta_k(0)) must be exactly 1 on a flat
    // pair; log(theta_k(z)/theta_k(0)) is an even series with no constant.
    {
        int kmax = pair.m / 2;
        WSeries body = theta_body(tk, kmax, N);
        WSeries unit = body.divided_by([&] {
            WSeries c(kmax, N);
            c[0] = body[0];
            return c;
        }());
        ZSeries logf = zs_from_w(unit.log(), Scalar::pi_term(-1, Cyclo24(Rat(1, 4))));
        FormSeries dethalf = det_half_from_log(logf, data.tr);
        if (!(dethalf == FormSeries::constant(pair.m, QSeries::one(N))))
            throw CalcError("loop_cs: det-half prefactor is not 1 on a flat pair");
    }

    ZSeries bracket = zs_from_w(theta_logderiv(bk, (pair.m - 1) / 2, N), z_per_R);
    FormSeries integrand = bracket_trace(bracket, A, data.pw);
    return integrand.scaled(Scalar::pi_term(-2, Cyclo24(Rat(1, 8)))).integrate_t01();
}

} // namespace cscalc
