#pragma once

#include "cscalc/cyclo.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace cscalc {

/// Laurent polynomial in a formal symbol pi with Cyclo24 coefficients.
/// pi is never evaluated during exact verification; every identity in the
/// suites is pi-homogeneous, so the exponent is pure bookkeeping.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n)
    {
        if (n != 0)
            terms_.emplace_back(0, Cyclo24(n));
    }
    Scalar(const Rat& r)
    {
        if (!cscalc::is_zero(r))
            terms_.emplace_back(0, Cyclo24(r));
    }
    Scalar(const Cyclo24& c)
    {
        if (!c.is_zero())
            terms_.emplace_back(0, c);
    }

    /// c * pi^e
    static Scalar pi_term(int e, Cyclo24 c);
    static Scalar pi_pow(int e) { return pi_term(e, Cyclo24(1)); }

    bool is_zero() const { return terms_.empty(); }
    /// Exactly one stored term.
    bool is_monomial() const { return terms_.size() == 1; }
    /// True when the value is c*pi^0 with c rational.
    bool is_rational() const;
    Rat rational_part() const;

    /// All terms share one pi exponent (vacuously true for 0).
    bool is_pi_homogeneous(int expected_exponent) const;
    /// Homogeneous degree of nonzero scalar, if homogeneous.
    std::optional<int> pi_degree() const;

    const std::vector<std::pair<int, Cyclo24>>& terms() const { return terms_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    /// Multiplicative inverse of a single pi-monomial; InvalidInverse otherwise.
    Scalar inverse() const;

    std::complex<double> eval(double pi_value) const;

    std::string to_string() const;

private:
    void insert(int e, const Cyclo24& c);
    // Sorted by pi exponent, no zero coefficients.
    std::vector<std::pair<int, Cyclo24>> terms_;
};

} // namespace cscalc
