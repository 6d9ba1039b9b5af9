#pragma once

#include "cscalc/formseries.hpp"
#include "cscalc/wseries.hpp"

#include <vector>

namespace cscalc {

/// n x n matrix of FormSeries over one chart.
class MatrixForm {
public:
    MatrixForm() = default;
    MatrixForm(int n, int m)
        : n_(n)
        , m_(m)
        , e_(n * n, FormSeries(m))
    {
    }

    static MatrixForm identity(int n, int m);

    int n() const { return n_; }
    int chart_dim() const { return m_; }
    FormSeries& at(int i, int j) { return e_[i * n_ + j]; }
    const FormSeries& at(int i, int j) const { return e_[i * n_ + j]; }

    bool is_zero() const;

    MatrixForm operator-() const;
    MatrixForm& operator+=(const MatrixForm& o);
    MatrixForm& operator-=(const MatrixForm& o);
    friend MatrixForm operator+(MatrixForm a, const MatrixForm& b) { return a += b; }
    friend MatrixForm operator-(MatrixForm a, const MatrixForm& b) { return a -= b; }
    friend MatrixForm operator*(const MatrixForm& a, const MatrixForm& b);

    MatrixForm scaled(const Scalar& s) const;
    MatrixForm scaled(const Rat& r) const;
    MatrixForm d() const;
    MatrixForm times_t(int k = 1) const;
    FormSeries trace() const;

private:
    int n_ = 0, m_ = 0;
    std::vector<FormSeries> e_;
};

/// R = dA + A ^ A for a matrix of 1-forms.
MatrixForm curvature(const MatrixForm& A);

/// Two connections d + A0, d + A1 on one chart; claims_flat is verified at
/// construction (both curvatures must vanish identically).
struct ConnectionPair {
    int m = 0, n = 0;
    MatrixForm A0, A1;
    bool claims_flat = false;

    ConnectionPair() = default;
    ConnectionPair(MatrixForm a0, MatrixForm a1, bool flat = false);

    /// A = A1 - A0.
    MatrixForm difference() const { return A1 - A0; }
    /// A_t = A0 + t A.
    MatrixForm interpolated() const;
    /// Swapped pair (A1, A0).
    ConnectionPair swapped() const { return ConnectionPair(A1, A0, claims_flat); }
};

/// Curvature of the t-family: R_t = d(A_t) + A_t ^ A_t, quadratic in t.
MatrixForm curvature_family(const ConnectionPair& pair);

/// One-variable power series in a matrix slot with QSeries coefficients.
using ZSeries = std::vector<QSeries>;

/// Reads a w-series as a series in the matrix variable: slot k picks up
/// per_power^k. Used to substitute w = R/(4 pi) or z = R/(4 pi^2).
ZSeries zs_from_w(const WSeries& w, const Scalar& per_power);
ZSeries zs_derivative(const ZSeries& f);
ZSeries zs_mul(const ZSeries& a, const ZSeries& b);
/// a/b with b[0] an invertible QSeries.
ZSeries zs_div(const ZSeries& a, const ZSeries& b);
/// log f with f[0] == 1; BranchError otherwise.
ZSeries zs_log(const ZSeries& f);

/// X^0..X^kmax; stops early (and shrinks) once a power vanishes.
std::vector<MatrixForm> matrix_powers(const MatrixForm& X, int kmax);
std::vector<FormSeries> power_traces(const std::vector<MatrixForm>& pw);

/// sum_k f[k] X^k over precomputed powers.
MatrixForm apply_series(const ZSeries& f, const std::vector<MatrixForm>& pw);
/// Convenience form; with infinite_tail the matrix must have no 0-form part
/// (NotNilpotent otherwise), since the series is then a truncation.
MatrixForm apply_series(const ZSeries& f, const MatrixForm& X, bool infinite_tail = true);

/// f[0]*n + sum_{k>=1} f[k] tr[X^k] over precomputed power traces.
FormSeries trace_of_series(const ZSeries& f, const std::vector<FormSeries>& traces, int n);

/// sum_k g[k] tr[A X^k].
FormSeries bracket_trace(const ZSeries& g, const MatrixForm& A, const std::vector<MatrixForm>& pw);

/// e^P for a form with vanishing 0-form component.
FormSeries exp_nilpotent(const FormSeries& P);

/// det^{1/2}(f(X)) = exp(1/2 sum_k logf[k] tr[X^k]), logf = log of f with
/// f(0) = 1 fixed to the principal branch.
FormSeries det_half_from_log(const ZSeries& logf, const std::vector<FormSeries>& traces);
/// Direct form; BranchError when f[0] != 1.
FormSeries det_half(const ZSeries& f, const MatrixForm& R);

/// tr[f(R)] (Chern-Weil form; closed).
FormSeries tr_f(const ZSeries& f, const MatrixForm& R, int n);

/// Theorem-2.1-style transgression: int_0^1 tr[A f'(R_t)] dt, so that
/// d(result) = tr[f(R_1)] - tr[f(R_0)].
FormSeries transgress_tr(const ZSeries& f, const ConnectionPair& pair);

/// Theorem-2.2-style transgression for f with f(0) = 1:
/// int_0^1 (1/2) det^{1/2}(f(R_t)) tr[A f'/f(R_t)] dt, so that
/// d(result) = det^{1/2}(f(R_1)) - det^{1/2}(f(R_0)).
FormSeries transgress_det_half(const ZSeries& f, const ConnectionPair& pair);

/// tr[A ^ dA + (2/3) A ^ A ^ A].
FormSeries cs_classic(const MatrixForm& A);

} // namespace cscalc
