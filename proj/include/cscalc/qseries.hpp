#pragma once

#include "cscalc/scalar.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cscalc {

/// Truncated Laurent series on the q^{1/24} grid with Scalar coefficients.
/// A stored exponent k means q^{k/24}; all stored exponents are < trunc.
/// trunc == Exact marks a polynomial value with no unknown tail (scenario
/// data, curvature coefficients); arithmetic truncates to the coarser
/// operand.
class QSeries {
public:
    static constexpr int Exact = std::numeric_limits<int>::max();

    QSeries() = default;
    explicit QSeries(Scalar constant, int trunc = Exact)
        : trunc_(trunc)
    {
        if (!constant.is_zero() && 0 < trunc)
            terms_.emplace_back(0, std::move(constant));
    }
    QSeries(long n)
        : QSeries(Scalar(n))
    {
    }

    static QSeries zero(int trunc = Exact)
    {
        QSeries f;
        f.trunc_ = trunc;
        return f;
    }
    /// c * q^{k/24}
    static QSeries monomial(int k, Scalar c, int trunc = Exact);
    static QSeries one(int trunc = Exact) { return QSeries(Scalar(1), trunc); }

    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<int, Scalar>>& terms() const { return terms_; }

    /// Coefficient of q^{k/24} (zero Scalar when absent).
    const Scalar& coeff(int k) const;
    /// Lowest stored exponent; requires nonzero.
    int lead_exponent() const;

    /// Drops terms at exponent >= n and tightens trunc to min(trunc, n).
    QSeries truncated(int n) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries scaled(const Scalar& s) const;

    friend bool operator==(const QSeries& a, const QSeries& b)
    {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

    /// Multiplicative inverse. The lead coefficient must be an invertible
    /// Scalar monomial; with lead exponent v and truncation N the result is
    /// valid (and truncated) to N - 2v.
    QSeries inverted() const;

    /// exp of a series supported on strictly positive exponents (or zero).
    QSeries exp() const;
    /// log of a series with constant term 1.
    QSeries log() const;

    QSeries pow(int n) const;

    /// T-action tau -> tau+1: multiplies the q^{k/24} coefficient by zeta_24^k.
    QSeries tshifted() const;

    /// pi-homogeneity of every coefficient at the given degree.
    bool is_pi_homogeneous(int degree) const;

    /// Deterministic human-readable expansion, e.g. "1/4 + 6*q + 6*q^2".
    std::string to_string() const;

    nlohmann::json to_json() const;
    static QSeries from_json(const nlohmann::json& j);

private:
    void insert(int k, const Scalar& c);
    void retruncate(int n);

    int trunc_ = Exact;
    // Sorted by exponent, no zero coefficients, all exponents < trunc_.
    std::vector<std::pair<int, Scalar>> terms_;
};

/// Scalar wire format: [[pi_exp, [8 rationals as "num/den" strings]], ...].
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

} // namespace cscalc
