#include "cscalc/errors.hpp"
#include "cscalc/theta.hpp"

#include <doctest.h>

using namespace cscalc;

namespace {

QSeries qmono(int k, Rat c, int N) { return QSeries::monomial(k, Scalar(c), N); }

} // namespace

TEST_CASE("theta vanishes at v = 0, nulls start correctly")
{
    const int N = 96;
    WSeries th = theta_expand(ThetaKind::Theta, 3, N);
    CHECK(th[0].is_zero());
    WSeries t2 = theta_expand(ThetaKind::Theta2, 3, N);
    WSeries t3 = theta_expand(ThetaKind::Theta3, 3, N);
    CHECK(t2[0].coeff(0) == Scalar(1));
    CHECK(t3[0].coeff(0) == Scalar(1));
}

TEST_CASE("parity: theta odd, theta1..3 even")
{
    const int N = 72;
    CHECK(theta_expand(ThetaKind::Theta, 6, N).is_odd());
    CHECK(theta_expand(ThetaKind::Theta1, 6, N).is_even());
    CHECK(theta_expand(ThetaKind::Theta2, 6, N).is_even());
    CHECK(theta_expand(ThetaKind::Theta3, 6, N).is_even());
}

TEST_CASE("w^1 coefficient of theta equals 2 eta^3")
{
    const int N = 240;
    WSeries th = theta_expand(ThetaKind::Theta, 1, N);
    QSeries eta = eta_series(N);
    QSeries res = th[1] - (eta * eta * eta).scaled(Scalar(2));
    CHECK(res.is_zero());

    // leading term by hand: 2 q^{1/8}
    CHECK(th[1].lead_exponent() == 3);
    CHECK(th[1].coeff(3) == Scalar(2));
}

TEST_CASE("null products match the two-variable expansions at v = 0")
{
    const int N = 120;
    for (auto kind : {ThetaKind::Theta1, ThetaKind::Theta2, ThetaKind::Theta3}) {
        WSeries w = theta_expand(kind, 2, N);
        CHECK((w[0] - theta_null(kind, N)).is_zero());
    }
}

TEST_CASE("jacobi identity residual vanishes to high order")
{
    QSeries res = jacobi_residual(240);
    CHECK(res.is_zero());

    // leading behavior: theta'(0) = 2 pi q^{1/8} + ..., matching the product
    QSeries tp = theta_prime_null(240);
    CHECK(tp.lead_exponent() == 3);
    CHECK(tp.coeff(3) == Scalar::pi_term(1, Cyclo24(2)));
}

TEST_CASE("perturbing one factor breaks the jacobi identity")
{
    const int N = 96;
    WSeries th = theta_expand(ThetaKind::Theta, 1, N);
    QSeries lhs = th[1].scaled(Scalar::pi_pow(1));
    QSeries rhs = theta_null(ThetaKind::Theta1, N) * theta_null(ThetaKind::Theta2, N);
    // theta3 replaced by 1
    CHECK(!(lhs - rhs.scaled(Scalar::pi_pow(1))).is_zero());
}

TEST_CASE("regularized bracket against the cotangent Laurent oracle")
{
    // pi cot(pi z) = 1/z - pi^2 z/3 - pi^4 z^3/45 - 2 pi^6 z^5/945 - ...
    // so [1/z - theta'/theta] at q^0 is pi^2 z/3 + pi^4 z^3/45 + 2 pi^6 z^5/945.
    const int N = 72;
    WSeries b = theta_logderiv(BracketKind::ThetaReg, 5, N);
    CHECK(b[1].coeff(0) == Scalar::pi_term(2, Cyclo24(Rat(1, 3))));
    CHECK(b[3].coeff(0) == Scalar::pi_term(4, Cyclo24(Rat(1, 45))));
    CHECK(b[5].coeff(0) == Scalar::pi_term(6, Cyclo24(Rat(2, 945))));
    CHECK(b[0].is_zero());
    CHECK(b[2].is_zero());
    CHECK(b[4].is_zero());
}

TEST_CASE("theta1 log-derivative starts as -pi tan(pi z)")
{
    const int N = 72;
    WSeries b = theta_logderiv(BracketKind::Theta1, 3, N);
    CHECK(b[1].coeff(0) == Scalar::pi_term(2, Cyclo24(-1)));
    CHECK(b[3].coeff(0) == Scalar::pi_term(4, Cyclo24(Rat(-1, 3))));
    // theta2/theta3 log-derivatives vanish at q^0
    WSeries b2 = theta_logderiv(BracketKind::Theta2, 3, N);
    CHECK(b2[1].coeff(0).is_zero());
    CHECK(!b2[1].is_zero()); // but not identically in q
}

TEST_CASE("dim-3 bracket constant: -(2/3) pi^2 + O(q)")
{
    const int N = 96;
    WSeries b = theta_logderiv(BracketKind::ThetaReg, 1, N) +
                theta_logderiv(BracketKind::Theta1, 1, N);
    CHECK(b[1].coeff(0) == Scalar::pi_term(2, Cyclo24(Rat(-2, 3))));
}

TEST_CASE("modular form table expansions")
{
    ModularFormTable t = modular_table(96);
    const int P = 72;

    QSeries d1 = qmono(0, Rat(1, 4), P) + qmono(24, Rat(6), P) + qmono(48, Rat(6), P);
    CHECK((t.delta[0].truncated(P) - d1).is_zero());

    QSeries e1 = qmono(0, Rat(1, 16), P) + qmono(24, Rat(-1), P) + qmono(48, Rat(7), P);
    CHECK((t.eps[0].truncated(P) - e1).is_zero());

    // paper-listed leading terms of the half-integer forms
    CHECK(t.delta[1].coeff(0) == Scalar(Rat(-1, 8)));
    CHECK(t.delta[1].coeff(12) == Scalar(Rat(-3)));
    CHECK(t.delta[1].coeff(24) == Scalar(Rat(-3)));
    CHECK(t.eps[1].coeff(12) == Scalar(Rat(1)));
    CHECK(t.eps[1].coeff(24) == Scalar(Rat(8)));
    CHECK(t.delta[2].coeff(0) == Scalar(Rat(-1, 8)));
    CHECK(t.delta[2].coeff(12) == Scalar(Rat(3)));
    CHECK(t.delta[2].coeff(24) == Scalar(Rat(-3)));
    CHECK(t.eps[2].coeff(12) == Scalar(Rat(-1)));
    CHECK(t.eps[2].coeff(24) == Scalar(Rat(8)));
}

TEST_CASE("E4 from divisor sums")
{
    ModularFormTable t = modular_table(144);
    // sigma_3: 1, 9, 28, 73, 126
    CHECK(t.e4.coeff(0) == Scalar(1));
    CHECK(t.e4.coeff(24) == Scalar(240));
    CHECK(t.e4.coeff(48) == Scalar(2160));
    CHECK(t.e4.coeff(72) == Scalar(240 * 28));
    CHECK(t.e4.coeff(96) == Scalar(240 * 73));
    CHECK(t.e4.coeff(120) == Scalar(240 * 126));
}

TEST_CASE("eta and eta^24")
{
    const int N = 240;
    QSeries eta = eta_series(N);
    CHECK(eta.lead_exponent() == 1);
    QSeries e24 = eta.pow(24);
    CHECK(e24.lead_exponent() == 24);
    CHECK(e24.coeff(24) == Scalar(1));
    // Every coefficient integral and on the integer-q grid
    for (const auto& [k, c] : e24.terms()) {
        CHECK(k % 24 == 0);
        CHECK(c.is_rational());
        CHECK(c.rational_part().get_den() == 1);
    }
}

TEST_CASE("T-shift relations among theta nulls and delta/eps")
{
    const int N = 120;
    ModularFormTable t = modular_table(N);
    QSeries th2_4 = theta_null(ThetaKind::Theta2, N).pow(4);
    QSeries th3_4 = theta_null(ThetaKind::Theta3, N).pow(4);
    CHECK((th2_4.tshifted() - th3_4).is_zero());
    CHECK((th3_4.tshifted() - th2_4).is_zero());
    CHECK((t.delta[1].tshifted() - t.delta[2]).is_zero());
    CHECK((t.eps[1].tshifted() - t.eps[2]).is_zero());
    CHECK((t.delta[2].tshifted() - t.delta[1]).is_zero());
}

TEST_CASE("decompose_gamma0_2 basis round trips")
{
    ModularFormTable t = modular_table(96);

    // basis elements
    {
        ModDecomposition d = decompose_gamma0_2(t.delta[1] * t.delta[1], 4, t);
        for (const auto& [a, b, c] : d.terms) {
            if (a == 2 && b == 0)
                CHECK(c == 1);
            else
                CHECK(c == 0);
        }
    }
    {
        ModDecomposition d = decompose_gamma0_2(t.eps[1], 4, t);
        for (const auto& [a, b, c] : d.terms) {
            if (a == 0 && b == 1)
                CHECK(c == 1);
            else
                CHECK(c == 0);
        }
    }

    // weight-6 random combination
    Rat h0 = rat(3, 7), h1 = rat(-5, 2);
    QSeries d2_8 = t.delta[1].scaled(Scalar(Rat(8)));
    QSeries f = d2_8.pow(3).scaled(Scalar(h0)) + (d2_8 * t.eps[1]).scaled(Scalar(h1));
    ModDecomposition d = decompose_gamma0_2(f, 6, t);
    QSeries back = d.reconstruct(t, 96);
    CHECK((back - f).is_zero());
    for (const auto& [a, b, c] : d.terms) {
        if (a == 3 && b == 0)
            CHECK(c == h0 * 512);
        if (a == 1 && b == 1)
            CHECK(c == h1 * 8);
    }

    // E4 is a weight-4 form over the full group, hence also in the ring;
    // a perturbed non-modular series is rejected.
    CHECK_NOTHROW(decompose_gamma0_2(t.e4, 4, t));
    QSeries junk = t.e4 + QSeries::monomial(36, Scalar(1), t.e4.trunc());
    CHECK_THROWS_AS(decompose_gamma0_2(junk, 4, t), NotInRing);
}

TEST_CASE("genus log series: normalization and parity")
{
    const int N = 72;
    for (auto kind : {GenusKind::PhiL, GenusKind::PhiW, GenusKind::PhiWPrime, GenusKind::PsiW}) {
        WSeries lw = genus_log_w(kind, 4, N);
        CHECK(lw[0].is_zero()); // log of a unit with constant term exactly 1
        CHECK(lw[1].is_zero()); // even function of w
        CHECK(lw[3].is_zero());
    }
    // PsiW at q^0: log(w/sin w) = w^2/6 + w^4/180 + ...
    WSeries lw = genus_log_w(GenusKind::PsiW, 4, N);
    CHECK(lw[2].coeff(0) == Scalar(Rat(1, 6)));
    CHECK(lw[4].coeff(0) == Scalar(Rat(1, 180)));
}
