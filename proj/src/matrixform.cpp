#include "cscalc/matrixform.hpp"

#include "cscalc/errors.hpp"

namespace cscalc {

MatrixForm MatrixForm::identity(int n, int m)
{
    MatrixForm r(n, m);
    for (int i = 0; i < n; ++i)
        r.at(i, i) = FormSeries::constant(m, QSeries::one());
    return r;
}

bool MatrixForm::is_zero() const
{
    for (const auto& f : e_)
        if (!f.is_zero())
            return false;
    return true;
}

MatrixForm MatrixForm::operator-() const
{
    MatrixForm r = *this;
    for (auto& f : r.e_)
        f = -f;
    return r;
}

MatrixForm& MatrixForm::operator+=(const MatrixForm& o)
{
    if (n_ != o.n_ || m_ != o.m_)
        throw ShapeError("MatrixForm: shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

MatrixForm& MatrixForm::operator-=(const MatrixForm& o)
{
    if (n_ != o.n_ || m_ != o.m_)
        throw ShapeError("MatrixForm: shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

MatrixForm operator*(const MatrixForm& a, const MatrixForm& b)
{
    if (a.n_ != b.n_ || a.m_ != b.m_)
        throw ShapeError("MatrixForm: shape mismatch");
    MatrixForm r(a.n_, a.m_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            FormSeries acc(a.m_);
            for (int k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero())
                    continue;
                acc += a.at(i, k) * b.at(k, j);
            }
            r.at(i, j) = std::move(acc);
        }
    return r;
}

MatrixForm MatrixForm::scaled(const Scalar& s) const
{
    MatrixForm r = *this;
    for (auto& f : r.e_)
        f = f.scaled(s);
    return r;
}

MatrixForm MatrixForm::scaled(const Rat& c) const { return scaled(Scalar(c)); }

MatrixForm MatrixForm::d() const
{
    MatrixForm r = *this;
    for (auto& f : r.e_)
        f = f.d();
    return r;
}

MatrixForm MatrixForm::times_t(int k) const
{
    MatrixForm r = *this;
    for (auto& f : r.e_)
        f = f.times_t(k);
    return r;
}

FormSeries MatrixForm::trace() const
{
    FormSeries acc(m_);
    for (int i = 0; i < n_; ++i)
        acc += at(i, i);
    return acc;
}

MatrixForm curvature(const MatrixForm& A) { return A.d() + A * A; }

ConnectionPair::ConnectionPair(MatrixForm a0, MatrixForm a1, bool flat)
    : m(a0.chart_dim())
    , n(a0.n())
    , A0(std::move(a0))
    , A1(std::move(a1))
    , claims_flat(flat)
{
    if (A1.n() != n || A1.chart_dim() != m)
        throw ShapeError("ConnectionPair: mismatched connections");
    if (claims_flat) {
        if (!curvature(A0).is_zero() || !curvature(A1).is_zero())
            throw FlatnessViolation("ConnectionPair: claims_flat but curvature is nonzero");
    }
}

MatrixForm ConnectionPair::interpolated() const { return A0 + difference().times_t(1); }

MatrixForm curvature_family(const ConnectionPair& pair)
{
    return curvature(pair.interpolated());
}

ZSeries zs_from_w(const WSeries& w, const Scalar& per_power)
{
    ZSeries f(w.wdeg() + 1);
    Scalar p(1);
    for (int k = 0; k <= w.wdeg(); ++k) {
        if (k > 0)
            p *= per_power;
        f[k] = w[k].scaled(p);
    }
    return f;
}

ZSeries zs_derivative(const ZSeries& f)
{
    if (f.empty())
        return {};
    ZSeries g(f.size() - 1);
    for (size_t k = 1; k < f.size(); ++k)
        g[k - 1] = f[k].scaled(Scalar(Rat((long)k)));
    return g;
}

ZSeries zs_mul(const ZSeries& a, const ZSeries& b)
{
    if (a.empty() || b.empty())
        return {};
    ZSeries r(std::min(a.size(), b.size()));
    for (size_t i = 0; i < a.size() && i < r.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size() && i + j < r.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

ZSeries zs_div(const ZSeries& a, const ZSeries& b)
{
    if (b.empty())
        throw NotInvertible("zs_div: empty denominator");
    QSeries lead_inv = b[0].inverted();
    size_t len = std::min(a.size(), b.size());
    ZSeries g(len);
    for (size_t d = 0; d < len; ++d) {
        QSeries acc = a[d];
        for (size_t e = 1; e <= d; ++e)
            acc -= g[d - e] * b[e];
        g[d] = acc * lead_inv;
    }
    return g;
}

ZSeries zs_log(const ZSeries& f)
{
    if (f.empty() || !(f[0] == QSeries::one(f[0].trunc())))
        throw BranchError("zs_log: constant term must be 1");
    ZSeries dl = zs_div(zs_derivative(f), f);
    ZSeries l(f.size());
    for (size_t d = 1; d < f.size(); ++d)
        l[d] = dl[d - 1].scaled(Scalar(Rat(1, (long)d)));
    return l;
}

std::vector<MatrixForm> matrix_powers(const MatrixForm& X, int kmax)
{
    std::vector<MatrixForm> pw;
    pw.push_back(MatrixForm::identity(X.n(), X.chart_dim()));
    for (int k = 1; k <= kmax; ++k) {
        MatrixForm next = pw.back() * X;
        if (next.is_zero())
            break;
        pw.push_back(std::move(next));
    }
    return pw;
}

std::vector<FormSeries> power_traces(const std::vector<MatrixForm>& pw)
{
    std::vector<FormSeries> tr;
    tr.reserve(pw.size());
    for (const auto& p : pw)
        tr.push_back(p.trace());
    return tr;
}

MatrixForm apply_series(const ZSeries& f, const std::vector<MatrixForm>& pw)
{
    MatrixForm acc(pw[0].n(), pw[0].chart_dim());
    for (size_t k = 0; k < f.size() && k < pw.size(); ++k) {
        if (f[k].is_zero())
            continue;
        MatrixForm term = pw[k];
        for (int i = 0; i < term.n(); ++i)
            for (int j = 0; j < term.n(); ++j)
                term.at(i, j) = term.at(i, j).scaled(f[k]);
        acc += term;
    }
    return acc;
}

MatrixForm apply_series(const ZSeries& f, const MatrixForm& X, bool infinite_tail)
{
    if (infinite_tail) {
        for (int i = 0; i < X.n(); ++i)
            for (int j = 0; j < X.n(); ++j)
                if (!X.at(i, j).component(0).is_zero())
                    throw NotNilpotent("apply_series: matrix has a 0-form part");
    }
    int kmax = (int)f.size() - 1;
    if (infinite_tail)
        kmax = std::max(kmax, X.chart_dim());
    return apply_series(f, matrix_powers(X, kmax));
}

FormSeries trace_of_series(const ZSeries& f, const std::vector<FormSeries>& traces, int n)
{
    FormSeries acc(traces.empty() ? 0 : traces[0].chart_dim());
    for (size_t k = 0; k < f.size() && k < traces.size(); ++k) {
        if (f[k].is_zero())
            continue;
        if (k == 0)
            acc += FormSeries::constant(acc.chart_dim(), f[0].scaled(Scalar(Rat(n))));
        else
            acc += traces[k].scaled(f[k]);
    }
    return acc;
}

FormSeries bracket_trace(const ZSeries& g, const MatrixForm& A, const std::vector<MatrixForm>& pw)
{
    FormSeries acc(A.chart_dim());
    for (size_t k = 0; k < g.size() && k < pw.size(); ++k) {
        if (g[k].is_zero())
            continue;
        FormSeries tr(A.chart_dim());
        for (int i = 0; i < A.n(); ++i)
            for (int j = 0; j < A.n(); ++j) {
                if (A.at(i, j).is_zero() || pw[k].at(j, i).is_zero())
                    continue;
                tr += A.at(i, j) * pw[k].at(j, i);
            }
        acc += tr.scaled(g[k]);
    }
    return acc;
}

FormSeries exp_nilpotent(const FormSeries& P)
{
    if (!P.component(0).is_zero())
        throw NotNilpotent("exp_nilpotent: nonzero 0-form part");
    FormSeries acc = FormSeries::constant(P.chart_dim(), QSeries::one());
    FormSeries pw = acc;
    for (int j = 1; 2 * j <= P.chart_dim(); ++j) {
        pw = pw * P;
        if (pw.is_zero())
            break;
        acc += pw.scaled(Rat(1, factorial(j).get_num().get_si()));
    }
    return acc;
}

FormSeries det_half_from_log(const ZSeries& logf, const std::vector<FormSeries>& traces)
{
    FormSeries half_tr(traces.empty() ? 0 : traces[0].chart_dim());
    for (size_t k = 1; k < logf.size() && k < traces.size(); ++k)
        if (!logf[k].is_zero())
            half_tr += traces[k].scaled(logf[k]);
    half_tr = half_tr.scaled(Rat(1, 2));
    return exp_nilpotent(half_tr);
}

FormSeries det_half(const ZSeries& f, const MatrixForm& R)
{
    ZSeries lf = zs_log(f); // BranchError if f(0) != 1
    auto pw = matrix_powers(R, R.chart_dim() / 2);
    return det_half_from_log(lf, power_traces(pw));
}

FormSeries tr_f(const ZSeries& f, const MatrixForm& R, int n)
{
    auto pw = matrix_powers(R, R.chart_dim() / 2);
    return trace_of_series(f, power_traces(pw), n);
}

FormSeries transgress_tr(const ZSeries& f, const ConnectionPair& pair)
{
    MatrixForm A = pair.difference();
    MatrixForm Rt = curvature_family(pair);
    auto pw = matrix_powers(Rt, (pair.m - 1) / 2);
    FormSeries integrand = bracket_trace(zs_derivative(f), A, pw);
    return integrand.integrate_t01();
}

FormSeries transgress_det_half(const ZSeries& f, const ConnectionPair& pair)
{
    MatrixForm A = pair.difference();
    MatrixForm Rt = curvature_family(pair);
    auto pw = matrix_powers(Rt, pair.m / 2);
    ZSeries logf = zs_log(f);
    FormSeries dethalf_t = det_half_from_log(logf, power_traces(pw));
    ZSeries fp_over_f = zs_div(zs_derivative(f), f);
    FormSeries integrand = dethalf_t * bracket_trace(fp_over_f, A, pw);
    return integrand.scaled(Rat(1, 2)).integrate_t01();
}

FormSeries cs_classic(const MatrixForm& A)
{
    MatrixForm dA = A.d();
    FormSeries acc = (A * dA).trace();
    acc += (A * A * A).trace().scaled(Rat(2, 3));
    return acc;
}

} // namespace cscalc
