#include "cscalc/cyclo.hpp"

#include "cscalc/errors.hpp"

#include <cmath>
#include <sstream>

namespace cscalc {

namespace {

// zeta^k for k = 0..23 as vectors in the power basis, from
// zeta^8 = zeta^4 - 1 and zeta^12 = -1.
const std::array<std::array<int, 8>, 24>& zeta_table()
{
    static const auto table = [] {
        std::array<std::array<int, 8>, 24> t{};
        for (int k = 0; k < 8; ++k)
            t[k][k] = 1;
        for (int k = 8; k < 12; ++k) {
            t[k][k - 4] = 1;
            t[k][k - 8] = -1;
        }
        for (int k = 12; k < 24; ++k)
            for (int j = 0; j < 8; ++j)
                t[k][j] = -t[k - 12][j];
        return t;
    }();
    return table;
}

} // namespace

Cyclo24 Cyclo24::zeta_pow(long k)
{
    k %= 24;
    if (k < 0)
        k += 24;
    Cyclo24 z;
    const auto& row = zeta_table()[k];
    for (int j = 0; j < Degree; ++j)
        z.c_[j] = row[j];
    return z;
}

bool Cyclo24::is_zero() const
{
    for (const auto& r : c_)
        if (!cscalc::is_zero(r))
            return false;
    return true;
}

bool Cyclo24::is_rational() const
{
    for (int j = 1; j < Degree; ++j)
        if (!cscalc::is_zero(c_[j]))
            return false;
    return true;
}

Cyclo24 Cyclo24::operator-() const
{
    Cyclo24 r;
    for (int j = 0; j < Degree; ++j)
        r.c_[j] = -c_[j];
    return r;
}

Cyclo24& Cyclo24::operator+=(const Cyclo24& o)
{
    for (int j = 0; j < Degree; ++j)
        c_[j] += o.c_[j];
    return *this;
}

Cyclo24& Cyclo24::operator-=(const Cyclo24& o)
{
    for (int j = 0; j < Degree; ++j)
        c_[j] -= o.c_[j];
    return *this;
}

Cyclo24 operator*(const Cyclo24& a, const Cyclo24& b)
{
    if (a.is_rational()) {
        if (cscalc::is_zero(a.c_[0]))
            return {};
        Cyclo24 r;
        for (int j = 0; j < Cyclo24::Degree; ++j)
            r.c_[j] = a.c_[0] * b.c_[j];
        return r;
    }
    if (b.is_rational())
        return b * a;
    Cyclo24 r;
    const auto& table = zeta_table();
    for (int i = 0; i < Cyclo24::Degree; ++i) {
        if (cscalc::is_zero(a.c_[i]))
            continue;
        for (int j = 0; j < Cyclo24::Degree; ++j) {
            if (cscalc::is_zero(b.c_[j]))
                continue;
            Rat p = a.c_[i] * b.c_[j];
            if (i + j < Cyclo24::Degree) {
                r.c_[i + j] += p;
            } else {
                const auto& row = table[i + j];
                for (int k = 0; k < Cyclo24::Degree; ++k)
                    if (row[k] != 0)
                        r.c_[k] += (row[k] > 0) ? p : -p;
            }
        }
    }
    return r;
}

Cyclo24 Cyclo24::inverse() const
{
    if (is_zero())
        throw InvalidInverse("Cyclo24: inverse of zero");
    if (is_rational()) {
        Cyclo24 r;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Solve (this * x) = 1 in the power basis: column j of the system is
    // this * zeta^j.
    constexpr int n = Degree;
    std::array<std::array<Rat, n + 1>, n> aug{};
    for (int j = 0; j < n; ++j) {
        Cyclo24 col = *this * zeta_pow(j);
        for (int i = 0; i < n; ++i)
            aug[i][j] = col.c_[i];
    }
    aug[0][n] = 1;
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!cscalc::is_zero(aug[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(aug[piv], aug[row]);
        Rat inv = 1 / aug[row][col];
        for (int k = col; k <= n; ++k)
            aug[row][k] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || cscalc::is_zero(aug[r][col]))
                continue;
            Rat f = aug[r][col];
            for (int k = col; k <= n; ++k)
                aug[r][k] -= f * aug[row][k];
        }
        ++row;
    }
    Cyclo24 x;
    for (int i = 0; i < n; ++i)
        x.c_[i] = aug[i][n];
    // In a field the system is always solvable; guard anyway.
    if (!((*this * x) == Cyclo24(1)))
        throw InvalidInverse("Cyclo24: inversion failed");
    return x;
}

std::complex<double> Cyclo24::to_complex() const
{
    std::complex<double> acc = 0.0;
    for (int j = 0; j < Degree; ++j) {
        if (cscalc::is_zero(c_[j]))
            continue;
        double v = c_[j].get_d();
        double arg = 2.0 * M_PI * j / 24.0;
        acc += v * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

std::string Cyclo24::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < Degree; ++j) {
        if (cscalc::is_zero(c_[j]))
            continue;
        Rat v = c_[j];
        if (!first)
            os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0)
            os << "-";
        first = false;
        Rat a = abs(v);
        if (j == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1)
                os << rat_to_string(a) << "*";
            os << "z24";
            if (j > 1)
                os << "^" << j;
        }
    }
    return os.str();
}

} // namespace cscalc
