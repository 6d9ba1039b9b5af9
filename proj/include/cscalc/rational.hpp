#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace cscalc {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Parses "num/den" or "num"; throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

/// n! as an exact rational (n small).
Rat factorial(int n);

/// Dense power series over Rat, coefficient of x^k at index k. The building
/// block for the trigonometric kernels: every series is generated from
/// sin/cos/sinh/cosh Taylor coefficients and exact division.
using RatSeries = std::vector<Rat>;

RatSeries sin_series(int order);        // x - x^3/6 + ...
RatSeries cos_series(int order);        // 1 - x^2/2 + ...
RatSeries sinh_series(int order);       // x + x^3/6 + ...
RatSeries sinh_over_x_series(int order);// 1 + x^2/6 + ...
RatSeries tanh_inv_x_series(int order); // x/tanh(x) = 1 + x^2/3 - ...

RatSeries series_mul(const RatSeries& a, const RatSeries& b, int order);
/// a/b with b[0] != 0.
RatSeries series_div(const RatSeries& a, const RatSeries& b, int order);
/// 1/b with b[0] != 0.
RatSeries series_inv(const RatSeries& b, int order);
/// log(b) with b[0] == 1.
RatSeries series_log(const RatSeries& b, int order);

} // namespace cscalc
