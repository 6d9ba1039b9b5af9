#pragma once

#include "cscalc/qseries.hpp"

#include <vector>

namespace cscalc {

/// Truncated Taylor series in w = pi*v with QSeries coefficients: slot d
/// holds the coefficient of w^d, d = 0..wdeg. Working in w keeps the theta
/// expansions pi-free; powers of pi reappear only when a w-series is read
/// as a series in v or z (see fold_arg users in thetalib).
class WSeries {
public:
    WSeries() = default;
    WSeries(int wdeg, int qtrunc)
        : c_(wdeg + 1, QSeries::zero(qtrunc))
    {
    }

    int wdeg() const { return (int)c_.size() - 1; }
    const QSeries& operator[](int d) const { return c_[d]; }
    QSeries& operator[](int d) { return c_[d]; }
    const QSeries& at0() const { return c_[0]; }

    bool is_zero() const;
    /// All even-slot (resp. odd-slot) coefficients vanish.
    bool is_odd() const;
    bool is_even() const;

    WSeries operator-() const;
    WSeries& operator+=(const WSeries& o);
    WSeries& operator-=(const WSeries& o);
    friend WSeries operator+(WSeries a, const WSeries& b) { return a += b; }
    friend WSeries operator-(WSeries a, const WSeries& b) { return a -= b; }
    /// Product truncated at min(wdeg) slots.
    friend WSeries operator*(const WSeries& a, const WSeries& b);
    WSeries& operator*=(const WSeries& o) { return *this = *this * o; }

    WSeries scaled(const QSeries& f) const;
    WSeries scaled(const Scalar& s) const;

    /// w -> s*w substitution: slot d picks up s^d.
    WSeries arg_scaled(const Scalar& s) const;

    /// d/dw.
    WSeries dw() const;

    /// this / b where b's w^0 coefficient is an invertible QSeries.
    WSeries divided_by(const WSeries& b) const;

    /// log of a series with w^0 coefficient exactly 1.
    WSeries log() const;

    std::string to_string() const;

private:
    std::vector<QSeries> c_;
};

} // namespace cscalc
