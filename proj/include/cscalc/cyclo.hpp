#pragma once

#include "cscalc/rational.hpp"

#include <array>
#include <complex>

namespace cscalc {

/// Element of Q(zeta_24), zeta = e^{2*pi*i/24}, in the power basis
/// zeta^0..zeta^7 reduced modulo zeta^8 = zeta^4 - 1.
/// Notable units: i = zeta^6, -1 = zeta^12, e^{pi i/4} = zeta^3.
class Cyclo24 {
public:
    static constexpr int Degree = 8;

    Cyclo24() = default;
    Cyclo24(const Rat& r)
    {
        c_[0] = r;
        c_[0].canonicalize(); // two-argument mpq_class construction is raw
    }
    Cyclo24(long n) { c_[0] = n; }

    /// zeta^k for any integer k (k taken mod 24).
    static Cyclo24 zeta_pow(long k);
    static Cyclo24 i() { return zeta_pow(6); }

    const Rat& operator[](int k) const { return c_[k]; }
    Rat& operator[](int k) { return c_[k]; }

    bool is_zero() const;
    bool is_rational() const;
    /// Rational part; only meaningful when is_rational().
    const Rat& rational_part() const { return c_[0]; }

    Cyclo24 operator-() const;
    Cyclo24& operator+=(const Cyclo24& o);
    Cyclo24& operator-=(const Cyclo24& o);
    friend Cyclo24 operator+(Cyclo24 a, const Cyclo24& b) { return a += b; }
    friend Cyclo24 operator-(Cyclo24 a, const Cyclo24& b) { return a -= b; }
    friend Cyclo24 operator*(const Cyclo24& a, const Cyclo24& b);
    Cyclo24& operator*=(const Cyclo24& o) { return *this = *this * o; }

    friend bool operator==(const Cyclo24& a, const Cyclo24& b) { return a.c_ == b.c_; }

    /// Field inverse; throws InvalidInverse on zero.
    Cyclo24 inverse() const;

    std::complex<double> to_complex() const;

    std::string to_string() const;

private:
    std::array<Rat, Degree> c_{};
};

} // namespace cscalc
