#include "cscalc/wseries.hpp"

#include "cscalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cscalc {

bool WSeries::is_zero() const
{
    for (const auto& q : c_)
        if (!q.is_zero())
            return false;
    return true;
}

bool WSeries::is_odd() const
{
    for (size_t d = 0; d < c_.size(); d += 2)
        if (!c_[d].is_zero())
            return false;
    return true;
}

bool WSeries::is_even() const
{
    for (size_t d = 1; d < c_.size(); d += 2)
        if (!c_[d].is_zero())
            return false;
    return true;
}

WSeries WSeries::operator-() const
{
    WSeries r = *this;
    for (auto& q : r.c_)
        q = -q;
    return r;
}

WSeries& WSeries::operator+=(const WSeries& o)
{
    size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (size_t d = 0; d < n; ++d)
        c_[d] += o.c_[d];
    return *this;
}

WSeries& WSeries::operator-=(const WSeries& o)
{
    size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (size_t d = 0; d < n; ++d)
        c_[d] -= o.c_[d];
    return *this;
}

WSeries operator*(const WSeries& a, const WSeries& b)
{
    int wdeg = std::min(a.wdeg(), b.wdeg());
    int qtr = std::min(a.c_[0].trunc(), b.c_[0].trunc());
    WSeries r(wdeg, qtr);
    for (int i = 0; i <= wdeg; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = 0; i + j <= wdeg && j <= b.wdeg(); ++j) {
            if (b.c_[j].is_zero())
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

WSeries WSeries::scaled(const QSeries& f) const
{
    WSeries r = *this;
    for (auto& q : r.c_)
        q = q * f;
    return r;
}

WSeries WSeries::scaled(const Scalar& s) const
{
    WSeries r = *this;
    for (auto& q : r.c_)
        q = q.scaled(s);
    return r;
}

WSeries WSeries::arg_scaled(const Scalar& s) const
{
    WSeries r = *this;
    Scalar p(1);
    for (int d = 0; d <= wdeg(); ++d) {
        if (d > 0)
            p *= s;
        r.c_[d] = r.c_[d].scaled(p);
    }
    return r;
}

WSeries WSeries::dw() const
{
    WSeries r = *this;
    for (int d = 0; d + 1 <= wdeg(); ++d)
        r.c_[d] = c_[d + 1].scaled(Scalar(Rat(d + 1)));
    r.c_[wdeg()] = QSeries::zero(c_[0].trunc());
    return r;
}

WSeries WSeries::divided_by(const WSeries& b) const
{
    QSeries lead_inv = b.c_[0].inverted();
    int wdeg = std::min(this->wdeg(), b.wdeg());
    int qtr = std::min({c_[0].trunc(), b.c_[0].trunc(), lead_inv.trunc()});
    WSeries g(wdeg, qtr);
    for (int d = 0; d <= wdeg; ++d) {
        QSeries acc = c_[d];
        for (int e = 1; e <= d; ++e)
            acc -= g[d - e] * b.c_[e];
        g[d] = acc * lead_inv;
    }
    return g;
}

WSeries WSeries::log() const
{
    if (!(c_[0] == QSeries::one(c_[0].trunc())))
        throw BranchError("WSeries::log: w^0 coefficient must be 1");
    // l' = f'/f integrated slot by slot.
    WSeries dl = dw().divided_by(*this);
    WSeries l(wdeg(), c_[0].trunc());
    for (int d = 1; d <= wdeg(); ++d)
        l[d] = dl[d - 1].scaled(Scalar(Rat(1, d)));
    return l;
}

std::string WSeries::to_string() const
{
    std::ostringstream os;
    bool some = false;
    for (int d = 0; d <= wdeg(); ++d) {
        if (c_[d].is_zero())
            continue;
        if (some)
            os << "\n";
        some = true;
        os << "w^" << d << ": " << c_[d].to_string();
    }
    if (!some)
        return "0";
    return os.str();
}

} // namespace cscalc
