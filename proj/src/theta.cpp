#include "cscalc/theta.hpp"

#include "cscalc/errors.hpp"

#include <algorithm>

namespace cscalc {

namespace {

// sin w, cos w as w-series with rational QSeries coefficients.
WSeries sin_w(int D, int N)
{
    WSeries s(D, N);
    Rat sign = 1;
    for (int d = 1; d <= D; d += 2) {
        s[d] = QSeries(Scalar(sign / factorial(d)), N);
        sign = -sign;
    }
    return s;
}

WSeries cos_w(int D, int N)
{
    WSeries s(D, N);
    Rat sign = 1;
    for (int d = 0; d <= D; d += 2) {
        s[d] = QSeries(Scalar(sign / factorial(d)), N);
        sign = -sign;
    }
    return s;
}

// e^{s*2i*w} with s = +-1: slot d holds (2 s i)^d / d!.
WSeries exp2iw(int sign, int D, int N)
{
    WSeries s(D, N);
    for (int d = 0; d <= D; ++d) {
        Cyclo24 c = Cyclo24::zeta_pow(6L * d * sign); // i^d up to sign
        s[d] = QSeries(Scalar(Rat(1) / factorial(d)) * Scalar(c), N);
    }
    return s;
}

// 1 + eps * q^{k0/24} * e^{s*2iw}; the (1 - q^j) factors use D = 0 slices.
WSeries product_factor(int eps, int k0, int sign, int D, int N)
{
    WSeries f = exp2iw(sign, D, N);
    WSeries r(D, N);
    for (int d = 0; d <= D; ++d)
        r[d] = QSeries::monomial(k0, Scalar(Rat(eps)), N) * f[d];
    r[0] += QSeries::one(N);
    return r;
}

QSeries one_minus_q_pow(int k0, int N)
{
    QSeries f = QSeries::one(N);
    f += QSeries::monomial(k0, Scalar(Rat(-1)), N);
    return f;
}

} // namespace

WSeries theta_body(ThetaKind kind, int D, int N)
{
    const bool half = (kind == ThetaKind::Theta2 || kind == ThetaKind::Theta3);
    const int eps = (kind == ThetaKind::Theta || kind == ThetaKind::Theta2) ? -1 : 1;

    WSeries body = (kind == ThetaKind::Theta)    ? sin_w(D, N)
                   : (kind == ThetaKind::Theta1) ? cos_w(D, N)
                                                 : [&] {
                                                       WSeries one(D, N);
                                                       one[0] = QSeries::one(N);
                                                       return one;
                                                   }();
    for (int j = 1;; ++j) {
        int k_full = 24 * j;              // q^j
        int k_var = half ? 24 * j - 12 : 24 * j; // q^{j-1/2} or q^j
        if (std::min(k_full, k_var) >= N)
            break;
        if (k_full < N)
            body = body.scaled(one_minus_q_pow(k_full, N));
        if (k_var < N) {
            body *= product_factor(eps, k_var, +1, D, N);
            body *= product_factor(eps, k_var, -1, D, N);
        }
    }
    return body;
}

QSeries theta_prefactor(ThetaKind kind, int N)
{
    if (kind == ThetaKind::Theta || kind == ThetaKind::Theta1)
        return QSeries::monomial(3, Scalar(Rat(2)), N); // 2 q^{1/8}
    return QSeries::one(N);
}

WSeries theta_expand(ThetaKind kind, int D, int N)
{
    return theta_body(kind, D, N).scaled(theta_prefactor(kind, N));
}

QSeries theta_null(ThetaKind kind, int N)
{
    switch (kind) {
    case ThetaKind::Theta:
        throw CalcError("theta_null: theta(0,tau) = 0, use theta_prime_null");
    case ThetaKind::Theta1: {
        // 2 q^{1/8} prod (1-q^j)(1+q^j)^2
        QSeries f = QSeries::monomial(3, Scalar(Rat(2)), N);
        for (int j = 1; 24 * j < N; ++j) {
            QSeries p = QSeries::one(N);
            p += QSeries::monomial(24 * j, Scalar(Rat(1)), N);
            f = f * one_minus_q_pow(24 * j, N) * p * p;
        }
        return f;
    }
    case ThetaKind::Theta2:
    case ThetaKind::Theta3: {
        int eps = (kind == ThetaKind::Theta2) ? -1 : 1;
        QSeries f = QSeries::one(N);
        for (int j = 1; 24 * j - 12 < N; ++j) {
            QSeries p = QSeries::one(N);
            p += QSeries::monomial(24 * j - 12, Scalar(Rat(eps)), N);
            if (24 * j < N)
                f = f * one_minus_q_pow(24 * j, N);
            f = f * p * p;
        }
        return f;
    }
    }
    throw CalcError("theta_null: bad kind");
}

QSeries theta_prime_null(int N)
{
    // 2 pi q^{1/8} prod (1-q^j)^3
    QSeries f = QSeries::monomial(3, Scalar::pi_term(1, Cyclo24(2)), N);
    for (int j = 1; 24 * j < N; ++j) {
        QSeries p = one_minus_q_pow(24 * j, N);
        f = f * p * p * p;
    }
    return f;
}

namespace {

// body/w for the odd theta body: slot d <- body[d+1].
WSeries shift_down(const WSeries& body, int N)
{
    WSeries u(body.wdeg() - 1, N);
    for (int d = 0; d + 1 <= body.wdeg(); ++d)
        u[d] = body[d + 1];
    return u;
}

// Folds a w-series into a z-series with ' = d/dv semantics: the quotient
// s(w)/u(w) is multiplied by pi (from d/dv = pi d/dw) and slot e picks up
// pi^e (from w = pi z).
WSeries fold_z(const WSeries& w_over_u, int extra_pi = 1)
{
    WSeries r = w_over_u;
    for (int d = 0; d <= r.wdeg(); ++d)
        r[d] = r[d].scaled(Scalar::pi_pow(d + extra_pi));
    return r;
}

} // namespace

WSeries theta_logderiv(BracketKind kind, int D, int N)
{
    if (kind == BracketKind::ThetaReg) {
        // [theta(z) - z theta'(z)]/z^2  /  [theta(z)/z], prefactors cancelled.
        WSeries body = theta_body(ThetaKind::Theta, D + 2, N);
        WSeries u = shift_down(body, N); // theta/(w * pref), unit
        WSeries num(D, N);
        for (int d = 0; d <= D; ++d)
            num[d] = body[d + 2].scaled(Scalar(Rat(-(d + 1)))); // (1-(d+2)) = -(d+1)
        return fold_z(num.divided_by(u));
    }
    ThetaKind tk = (kind == BracketKind::Theta1)   ? ThetaKind::Theta1
                   : (kind == BracketKind::Theta2) ? ThetaKind::Theta2
                                                   : ThetaKind::Theta3;
    WSeries body = theta_body(tk, D + 1, N);
    return fold_z(body.dw().divided_by(body));
}

WSeries genus_log_w(GenusKind kind, int D, int N)
{
    // Common factor z theta'(0)/theta(z) = body[1] / (body/w), with the
    // argument doubled for PhiL.
    WSeries body = theta_body(ThetaKind::Theta, D + 1, N);
    WSeries u = shift_down(body, N);
    if (kind == GenusKind::PhiL)
        u = u.arg_scaled(Scalar(2));
    WSeries f(D, N);
    f[0] = body[1];
    f = f.divided_by(u);

    switch (kind) {
    case GenusKind::PsiW:
        break;
    case GenusKind::PhiW:
    case GenusKind::PhiWPrime: {
        ThetaKind tk = (kind == GenusKind::PhiW) ? ThetaKind::Theta2 : ThetaKind::Theta3;
        WSeries tb = theta_body(tk, D, N);
        f *= tb.divided_by([&] {
            WSeries c(D, N);
            c[0] = tb[0];
            return c;
        }());
        break;
    }
    case GenusKind::PhiL: {
        WSeries tb = theta_body(ThetaKind::Theta1, D, N).arg_scaled(Scalar(2));
        f *= tb.divided_by([&] {
            WSeries c(D, N);
            c[0] = tb[0];
            return c;
        }());
        break;
    }
    }
    return f.log();
}

namespace {

QSeries e4_series(int N)
{
    QSeries f = QSeries::one(N);
    for (int n = 1; 24 * n < N; ++n) {
        long s3 = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0)
                s3 += (long)d * d * d;
        f += QSeries::monomial(24 * n, Scalar(Rat(240 * s3)), N);
    }
    return f;
}

} // namespace

QSeries eta_series(int N)
{
    QSeries f = QSeries::monomial(1, Scalar(1), N);
    for (int l = 1; 24 * l < N; ++l)
        f = f * one_minus_q_pow(24 * l, N);
    return f;
}

ModularFormTable modular_table(int N)
{
    if (N < 72)
        throw CalcError("modular_table: N must be >= 72");
    QSeries t1 = theta_null(ThetaKind::Theta1, N);
    QSeries t2 = theta_null(ThetaKind::Theta2, N);
    QSeries t3 = theta_null(ThetaKind::Theta3, N);
    QSeries t1_4 = t1.pow(4), t2_4 = t2.pow(4), t3_4 = t3.pow(4);

    Scalar eighth(Rat(1, 8)), sixteenth(Rat(1, 16));
    ModularFormTable t;
    t.delta[0] = (t2_4 + t3_4).scaled(eighth);
    t.eps[0] = (t2_4 * t3_4).scaled(sixteenth);
    t.delta[1] = -(t1_4 + t3_4).scaled(eighth);
    t.eps[1] = (t1_4 * t3_4).scaled(sixteenth);
    t.delta[2] = (t1_4 - t2_4).scaled(eighth);
    t.eps[2] = -(t1_4 * t2_4).scaled(sixteenth);
    t.e4 = e4_series(N);
    t.eta = eta_series(N);
    return t;
}

QSeries jacobi_residual(int N)
{
    WSeries th = theta_expand(ThetaKind::Theta, 1, N);
    QSeries lhs = th[1].scaled(Scalar::pi_pow(1)); // d/dv = pi d/dw at w = 0
    QSeries rhs = theta_null(ThetaKind::Theta1, N) * theta_null(ThetaKind::Theta2, N) *
                  theta_null(ThetaKind::Theta3, N);
    return lhs - rhs.scaled(Scalar::pi_pow(1));
}

QSeries ModDecomposition::reconstruct(const ModularFormTable& table, int trunc) const
{
    QSeries acc = QSeries::zero(trunc);
    for (const auto& [a, b, c] : terms) {
        QSeries basis = table.delta[1].truncated(trunc).pow(a) * table.eps[1].truncated(trunc).pow(b);
        acc += basis.scaled(Scalar(c));
    }
    return acc;
}

ModDecomposition decompose_gamma0_2(const QSeries& f, int weight, const ModularFormTable& table)
{
    if (weight < 0 || weight % 2 != 0)
        throw CalcError("decompose_gamma0_2: weight must be even and nonnegative");
    const int N = std::min(f.trunc(), table.delta[1].trunc());
    if (N == QSeries::Exact)
        throw CalcError("decompose_gamma0_2: finite truncation required");

    std::vector<std::pair<int, int>> basis; // (a, b) with 2a + 4b = weight
    for (int b = 0; 4 * b <= weight; ++b)
        basis.emplace_back((weight - 4 * b) / 2, b);

    std::vector<QSeries> basis_q;
    for (auto [a, b] : basis)
        basis_q.push_back(table.delta[1].truncated(N).pow(a) * table.eps[1].truncated(N).pow(b));

    // Rows indexed by exponents present anywhere; all coefficients must be
    // plain rationals.
    std::vector<int> exps;
    auto collect = [&](const QSeries& g) {
        for (const auto& [k, c] : g.terms()) {
            if (!c.is_rational())
                throw NotInRing("decompose_gamma0_2: non-rational coefficient");
            exps.push_back(k);
        }
    };
    collect(f.truncated(N));
    for (const auto& g : basis_q)
        collect(g);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

    const int cols = (int)basis.size();
    if ((int)exps.size() < cols)
        throw NotInRing("decompose_gamma0_2: not enough q-terms to determine coefficients");

    std::vector<std::vector<Rat>> m(exps.size(), std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t r = 0; r < exps.size(); ++r) {
        for (int c = 0; c < cols; ++c)
            m[r][c] = basis_q[c].coeff(exps[r]).rational_part();
        m[r][cols] = f.coeff(exps[r]).rational_part();
    }

    // Gaussian elimination with full consistency check.
    std::vector<int> pivot_col;
    size_t row = 0;
    for (int col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && is_zero(m[piv][col]))
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[row]);
        Rat inv = 1 / m[row][col];
        for (int k = col; k <= cols; ++k)
            m[row][k] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col]))
                continue;
            Rat fac = m[r][col];
            for (int k = col; k <= cols; ++k)
                m[r][k] -= fac * m[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if ((int)pivot_col.size() < cols)
        throw NotInRing("decompose_gamma0_2: basis expansion is rank-deficient at this truncation");
    for (size_t r = row; r < m.size(); ++r)
        if (!is_zero(m[r][cols]))
            throw NotInRing("decompose_gamma0_2: q-expansion not in R[delta2, eps2]");

    ModDecomposition d;
    d.weight = weight;
    for (int c = 0; c < cols; ++c)
        d.terms.emplace_back(basis[c].first, basis[c].second, m[c][cols]);

    // Residual check against the full available expansion.
    QSeries res = f.truncated(N) - d.reconstruct(table, N);
    if (!res.is_zero())
        throw NotInRing("decompose_gamma0_2: reconstruction mismatch");
    return d;
}

} // namespace cscalc
