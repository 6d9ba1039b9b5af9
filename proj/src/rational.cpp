#include "cscalc/rational.hpp"

#include <stdexcept>

namespace cscalc {

Rat rat_from_string(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("bad rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat factorial(int n)
{
    Rat r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

RatSeries sin_series(int order)
{
    RatSeries s(order + 1, Rat(0));
    Rat sign = 1;
    for (int k = 1; k <= order; k += 2) {
        s[k] = sign / factorial(k);
        sign = -sign;
    }
    return s;
}

RatSeries cos_series(int order)
{
    RatSeries s(order + 1, Rat(0));
    Rat sign = 1;
    for (int k = 0; k <= order; k += 2) {
        s[k] = sign / factorial(k);
        sign = -sign;
    }
    return s;
}

RatSeries sinh_series(int order)
{
    RatSeries s(order + 1, Rat(0));
    for (int k = 1; k <= order; k += 2)
        s[k] = Rat(1) / factorial(k);
    return s;
}

RatSeries sinh_over_x_series(int order)
{
    RatSeries s(order + 1, Rat(0));
    for (int k = 0; k <= order; k += 2)
        s[k] = Rat(1) / factorial(k + 1);
    return s;
}

RatSeries tanh_inv_x_series(int order)
{
    // x/tanh(x) = x cosh(x)/sinh(x) = cosh(x) / (sinh(x)/x)
    RatSeries cosh(order + 1, Rat(0));
    for (int k = 0; k <= order; k += 2)
        cosh[k] = Rat(1) / factorial(k);
    return series_div(cosh, sinh_over_x_series(order), order);
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b, int order)
{
    RatSeries r(order + 1, Rat(0));
    for (size_t i = 0; i < a.size() && (int)i <= order; ++i) {
        if (is_zero(a[i]))
            continue;
        for (size_t j = 0; j < b.size() && (int)(i + j) <= order; ++j)
            if (!is_zero(b[j]))
                r[i + j] += a[i] * b[j];
    }
    return r;
}

RatSeries series_inv(const RatSeries& b, int order)
{
    if (b.empty() || is_zero(b[0]))
        throw std::invalid_argument("series_inv: zero constant term");
    RatSeries r(order + 1, Rat(0));
    r[0] = 1 / b[0];
    for (int k = 1; k <= order; ++k) {
        Rat acc = 0;
        for (int j = 1; j <= k && j < (int)b.size(); ++j)
            acc += b[j] * r[k - j];
        r[k] = -acc / b[0];
    }
    return r;
}

RatSeries series_div(const RatSeries& a, const RatSeries& b, int order)
{
    return series_mul(a, series_inv(b, order), order);
}

RatSeries series_log(const RatSeries& b, int order)
{
    if (b.empty() || b[0] != 1)
        throw std::invalid_argument("series_log: constant term must be 1");
    // l' = b'/b, l[0] = 0
    RatSeries db(order + 1, Rat(0));
    for (int k = 1; k <= order && k < (int)b.size(); ++k)
        db[k - 1] = b[k] * k;
    RatSeries dl = series_div(db, b, order);
    RatSeries l(order + 1, Rat(0));
    for (int k = 1; k <= order; ++k)
        l[k] = dl[k - 1] / k;
    return l;
}

} // namespace cscalc
