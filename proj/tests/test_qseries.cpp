#include "cscalc/errors.hpp"
#include "cscalc/qseries.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace cscalc;

namespace {

// Structured pseudo-random series for property checks.
QSeries random_series(uint64_t seed, int trunc, bool invertible)
{
    uint64_t s = seed;
    auto next = [&s] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    QSeries f = QSeries::zero(trunc);
    if (invertible)
        f += QSeries::monomial(0, Scalar(Rat(1 + (long)(next() % 4))), trunc);
    int terms = 2 + next() % 4;
    for (int t = 0; t < terms; ++t) {
        int k = 1 + (int)(next() % (uint64_t)(trunc - 1));
        long num = (long)(next() % 7) - 3;
        if (num == 0)
            num = 1;
        f += QSeries::monomial(k, Scalar(Rat(num, 1 + (long)(next() % 3))), trunc);
    }
    return f;
}

} // namespace

TEST_CASE("monomial arithmetic on the 1/24 grid")
{
    // q^{1/8} * q^{1/8} = q^{1/4}: exponents 3 + 3 = 6
    QSeries a = QSeries::monomial(3, Scalar(1));
    CHECK((a * a) == QSeries::monomial(6, Scalar(1)));

    // (1 - q^{1/2})(1 + q^{1/2}) = 1 - q
    QSeries one = QSeries::one();
    QSeries h = QSeries::monomial(12, Scalar(1));
    QSeries prod = (one - h) * (one + h);
    CHECK(prod == one - QSeries::monomial(24, Scalar(1)));

    // f + 0 = f
    CHECK(a + QSeries::zero() == a);
}

TEST_CASE("geometric series inverse")
{
    int N = 240;
    QSeries f = QSeries::one(N) - QSeries::monomial(24, Scalar(1), N);
    QSeries inv = f.inverted();
    for (int k = 0; 24 * k < N; ++k)
        CHECK(inv.coeff(24 * k) == Scalar(1));
    CHECK((f * inv) == QSeries::one(N));
}

TEST_CASE("monomial inverse with negative exponents")
{
    QSeries f = QSeries::monomial(12, Scalar(1)); // q^{1/2}
    QSeries inv = f.inverted();
    CHECK(inv == QSeries::monomial(-12, Scalar(1)));
}

TEST_CASE("long-division oracle: 1/(1 - 2q^{1/2} + q)")
{
    // (1 - q^{1/2})^{-2} = sum (k+1) q^{k/2}; verify by multiplying back.
    int N = 120;
    QSeries f = QSeries::one(N) - QSeries::monomial(12, Scalar(2), N) +
                QSeries::monomial(24, Scalar(1), N);
    QSeries inv = f.inverted();
    CHECK(inv.coeff(0) == Scalar(1));
    CHECK(inv.coeff(12) == Scalar(2));
    CHECK(inv.coeff(24) == Scalar(3));
    CHECK((f * inv) == QSeries::one(N));
}

TEST_CASE("inverse of non-invertible leading term throws")
{
    QSeries f = QSeries::zero(48);
    CHECK_THROWS_AS(f.inverted(), NotInvertible);
    QSeries g = QSeries::monomial(0, Scalar(1) + Scalar::pi_pow(1), 48) +
                QSeries::monomial(24, Scalar(1), 48);
    CHECK_THROWS_AS(g.inverted(), NotInvertible);
}

TEST_CASE("exp and log")
{
    CHECK(QSeries::zero(48).exp() == QSeries::one(48));

    // log(1 - q) = -q - q^2/2 - q^3/3 - ...
    int N = 120;
    QSeries f = QSeries::one(N) - QSeries::monomial(24, Scalar(1), N);
    QSeries lg = f.log();
    for (int k = 1; 24 * k < N; ++k)
        CHECK(lg.coeff(24 * k) == Scalar(Rat(-1, k)));

    // round trip exp(log(1 + q + 5 q^2)) on the half-integer grid
    QSeries g = QSeries::one(N) + QSeries::monomial(24, Scalar(1), N) +
                QSeries::monomial(48, Scalar(5), N);
    CHECK(g.log().exp() == g);

    QSeries bad = QSeries::monomial(0, Scalar(2), 48);
    CHECK_THROWS_AS(bad.log(), BranchError);
    CHECK_THROWS_AS((QSeries::monomial(-3, Scalar(1), 48)).exp(), BranchError);
}

TEST_CASE("tshift basics")
{
    // tshift(q^{1/2}) = -q^{1/2}
    QSeries h = QSeries::monomial(12, Scalar(1), 48);
    CHECK(h.tshifted() == QSeries::monomial(12, Scalar(-1), 48));
    // integer exponents fixed
    QSeries q = QSeries::monomial(24, Scalar(Rat(5, 3)), 48);
    CHECK(q.tshifted() == q);
    // tshift(q^{1/8}) = zeta_24^3 q^{1/8}
    QSeries e = QSeries::monomial(3, Scalar(1), 48);
    CHECK(e.tshifted() == QSeries::monomial(3, Scalar(Cyclo24::zeta_pow(3)), 48));
}

TEST_CASE("ring axioms and tshift homomorphism on random series")
{
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        QSeries a = random_series(seed, 96, false);
        QSeries b = random_series(seed * 31 + 7, 96, false);
        QSeries c = random_series(seed * 57 + 3, 96, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a.tshifted() * b.tshifted() == (a * b).tshifted());

        // 24-fold tshift is the identity
        QSeries t = a;
        for (int i = 0; i < 24; ++i)
            t = t.tshifted();
        CHECK(t == a);
    }
}

TEST_CASE("inverse is two-sided for many random invertible series")
{
    for (uint64_t seed = 1; seed <= 1000; ++seed) {
        QSeries f = random_series(seed, 72, true);
        QSeries inv = f.inverted();
        CHECK((f * inv) == QSeries::one(72));
        CHECK((inv * f) == QSeries::one(72));
    }
}

TEST_CASE("mixed truncation takes the coarser operand")
{
    QSeries a = QSeries::one(48) + QSeries::monomial(30, Scalar(1), 48);
    QSeries b = QSeries::one(96) + QSeries::monomial(60, Scalar(1), 96);
    CHECK((a * b).trunc() == 48);
    CHECK((a + b).trunc() == 48);
    // exact values keep the finite truncation of the other operand
    CHECK((QSeries::one() * a).trunc() == 48);
}

TEST_CASE("JSON round trip is bit exact")
{
    QSeries f = QSeries::monomial(-12, Scalar::pi_term(-2, Cyclo24::zeta_pow(7)), 96) +
                QSeries::monomial(5, Scalar(Rat(22, 7)), 96) +
                QSeries::monomial(48, Scalar::pi_term(4, Cyclo24(Rat(-3, 11))), 96);
    nlohmann::json j = f.to_json();
    QSeries g = QSeries::from_json(j);
    CHECK(f == g);
    CHECK(j.dump() == g.to_json().dump());
}

TEST_CASE("pretty printer")
{
    QSeries f = QSeries(Scalar(Rat(1, 4)), 96);
    f += QSeries::monomial(24, Scalar(6), 96);
    f += QSeries::monomial(48, Scalar(6), 96);
    CHECK(f.to_string() == "1/4 + 6*q + 6*q^2");
    QSeries h = QSeries::monomial(12, Scalar(1), 96) - QSeries::monomial(36, Scalar(2), 96);
    CHECK(h.to_string() == "q^(1/2) - 2*q^(3/2)");
}
