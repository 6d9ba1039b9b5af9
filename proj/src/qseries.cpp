#include "cscalc/qseries.hpp"

#include "cscalc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cscalc {

QSeries QSeries::monomial(int k, Scalar c, int trunc)
{
    QSeries f;
    f.trunc_ = trunc;
    if (!c.is_zero() && k < trunc)
        f.terms_.emplace_back(k, std::move(c));
    return f;
}

const Scalar& QSeries::coeff(int k) const
{
    static const Scalar zero;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const auto& t, int key) { return t.first < key; });
    if (it != terms_.end() && it->first == k)
        return it->second;
    return zero;
}

int QSeries::lead_exponent() const
{
    if (terms_.empty())
        throw CalcError("lead_exponent of zero series");
    return terms_.front().first;
}

QSeries QSeries::truncated(int n) const
{
    QSeries r = *this;
    r.retruncate(std::min(trunc_, n));
    return r;
}

void QSeries::retruncate(int n)
{
    trunc_ = n;
    while (!terms_.empty() && terms_.back().first >= n)
        terms_.pop_back();
}

QSeries QSeries::operator-() const
{
    QSeries r;
    r.trunc_ = trunc_;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        r.terms_.emplace_back(k, -c);
    return r;
}

void QSeries::insert(int k, const Scalar& c)
{
    if (k >= trunc_ || c.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const auto& t, int key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, {k, c});
    }
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    retruncate(std::min(trunc_, o.trunc_));
    for (const auto& [k, c] : o.terms_)
        insert(k, c);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    retruncate(std::min(trunc_, o.trunc_));
    for (const auto& [k, c] : o.terms_)
        insert(k, -c);
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries r;
    r.trunc_ = std::min(a.trunc_, b.trunc_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        Scalar p = a.terms_[0].second * b.terms_[0].second;
        long k = (long)a.terms_[0].first + b.terms_[0].first;
        if (!p.is_zero() && k < r.trunc_)
            r.terms_.emplace_back((int)k, std::move(p));
        return r;
    }
    for (const auto& [ka, ca] : a.terms_) {
        if (ka >= r.trunc_ && r.trunc_ != QSeries::Exact)
            break;
        for (const auto& [kb, cb] : b.terms_) {
            long k = (long)ka + kb;
            if (r.trunc_ != QSeries::Exact && k >= r.trunc_)
                break;
            Scalar p = ca * cb;
            if (!p.is_zero())
                r.insert((int)k, p);
        }
    }
    return r;
}

QSeries QSeries::scaled(const Scalar& s) const
{
    QSeries r;
    r.trunc_ = trunc_;
    if (s.is_zero())
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        Scalar p = c * s;
        if (!p.is_zero())
            r.terms_.emplace_back(k, std::move(p));
    }
    return r;
}

QSeries QSeries::inverted() const
{
    if (terms_.empty())
        throw NotInvertible("QSeries: inverse of zero");
    const int v = terms_.front().first;
    Scalar lead_inv;
    try {
        lead_inv = terms_.front().second.inverse();
    } catch (const InvalidInverse&) {
        throw NotInvertible("QSeries: leading coefficient is not an invertible monomial");
    }
    if (terms_.size() == 1) {
        int t = (trunc_ == Exact) ? Exact : trunc_ - 2 * v;
        return monomial(-v, lead_inv, t);
    }
    if (trunc_ == Exact)
        throw NotInvertible("QSeries: inverse of a non-monomial needs finite truncation");
    // f = q^v * lead * (1 + g); invert the unit by the standard recurrence
    // over a dense window of length trunc - v.
    const int len = trunc_ - v;
    if (len <= 0)
        return zero(trunc_ - 2 * v);
    std::vector<Scalar> g(len);
    for (size_t i = 1; i < terms_.size(); ++i)
        g[terms_[i].first - v] = lead_inv * terms_[i].second;
    std::vector<Scalar> b(len);
    b[0] = Scalar(1);
    for (int k = 1; k < len; ++k) {
        Scalar acc;
        for (int j = 1; j <= k; ++j)
            if (!g[j].is_zero() && !b[k - j].is_zero())
                acc += g[j] * b[k - j];
        b[k] = -acc;
    }
    QSeries r;
    r.trunc_ = trunc_ - 2 * v;
    for (int k = 0; k < len; ++k)
        if (!b[k].is_zero() && k - v < r.trunc_)
            r.terms_.emplace_back(k - v, b[k] * lead_inv);
    return r;
}

QSeries QSeries::exp() const
{
    if (terms_.empty())
        return one(trunc_);
    if (terms_.front().first <= 0)
        throw BranchError("QSeries::exp: support must be strictly positive");
    if (trunc_ == Exact)
        throw CalcError("QSeries::exp: needs finite truncation");
    // E' = f' E on the 1/24 grid.
    const int len = trunc_;
    std::vector<Scalar> e(len);
    e[0] = Scalar(1);
    for (int n = 1; n < len; ++n) {
        Scalar acc;
        for (const auto& [k, c] : terms_) {
            if (k > n)
                break;
            if (!e[n - k].is_zero())
                acc += Scalar(Rat(k)) * c * e[n - k];
        }
        e[n] = acc.is_zero() ? Scalar() : Scalar(Rat(1, n)) * acc;
    }
    QSeries r;
    r.trunc_ = trunc_;
    for (int k = 0; k < len; ++k)
        if (!e[k].is_zero())
            r.terms_.emplace_back(k, e[k]);
    return r;
}

QSeries QSeries::log() const
{
    if (terms_.empty() || terms_.front().first != 0 || !(terms_.front().second == Scalar(1)))
        throw BranchError("QSeries::log: constant term must be 1");
    if (trunc_ == Exact)
        throw CalcError("QSeries::log: needs finite truncation");
    // l_n = f_n - (1/n) sum_{0<k<n} k l_k f_{n-k}
    const int len = trunc_;
    std::vector<Scalar> f(len);
    for (const auto& [k, c] : terms_)
        f[k] = c;
    std::vector<Scalar> l(len);
    for (int n = 1; n < len; ++n) {
        Scalar acc;
        for (int k = 1; k < n; ++k)
            if (!l[k].is_zero() && !f[n - k].is_zero())
                acc += Scalar(Rat(k)) * l[k] * f[n - k];
        Scalar v = f[n] - Scalar(Rat(1, n)) * acc;
        l[n] = v;
    }
    QSeries r;
    r.trunc_ = trunc_;
    for (int k = 1; k < len; ++k)
        if (!l[k].is_zero())
            r.terms_.emplace_back(k, l[k]);
    return r;
}

QSeries QSeries::pow(int n) const
{
    if (n < 0)
        return inverted().pow(-n);
    QSeries r = one(trunc_);
    QSeries base = *this;
    while (n > 0) {
        if (n & 1)
            r = r * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return r;
}

QSeries QSeries::tshifted() const
{
    QSeries r;
    r.trunc_ = trunc_;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        Scalar p = c * Scalar(Cyclo24::zeta_pow(k));
        if (!p.is_zero())
            r.terms_.emplace_back(k, std::move(p));
    }
    return r;
}

bool QSeries::is_pi_homogeneous(int degree) const
{
    for (const auto& [k, c] : terms_)
        if (!c.is_pi_homogeneous(degree))
            return false;
    return true;
}

std::string QSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string cs = c.to_string();
        bool minus = false;
        if (!first) {
            if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                cs.find(" - ") == std::string::npos) {
                minus = true;
                cs = cs.substr(1);
            }
            os << (minus ? " - " : " + ");
        }
        first = false;
        bool parens = cs.find(' ') != std::string::npos;
        if (k == 0) {
            os << (parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") {
            os << (parens ? "(" + cs + ")" : cs) << "*";
        }
        int g = std::gcd(std::abs(k), 24);
        int num = k / g, den = 24 / g;
        os << "q";
        if (den == 1) {
            if (num != 1)
                os << "^" << num;
        } else {
            os << "^(" << num << "/" << den << ")";
        }
    }
    return os.str();
}

nlohmann::json scalar_to_json(const Scalar& s)
{
    nlohmann::json sc = nlohmann::json::array();
    for (const auto& [e, cy] : s.terms()) {
        nlohmann::json coords = nlohmann::json::array();
        for (int i = 0; i < Cyclo24::Degree; ++i)
            coords.push_back(rat_to_string(cy[i]));
        sc.push_back(nlohmann::json::array({e, coords}));
    }
    return sc;
}

Scalar scalar_from_json(const nlohmann::json& j)
{
    Scalar s;
    for (const auto& st : j) {
        int e = st.at(0).get<int>();
        Cyclo24 cy;
        const auto& coords = st.at(1);
        if (coords.size() != Cyclo24::Degree)
            throw CalcError("scalar_from_json: expected 8 coordinates");
        for (int i = 0; i < Cyclo24::Degree; ++i)
            cy[i] = rat_from_string(coords.at(i).get<std::string>());
        s += Scalar::pi_term(e, cy);
    }
    return s;
}

nlohmann::json QSeries::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
        terms.push_back(nlohmann::json::array({k, scalar_to_json(c)}));
    return nlohmann::json{{"trunc", trunc_}, {"terms", terms}};
}

QSeries QSeries::from_json(const nlohmann::json& j)
{
    QSeries f;
    f.trunc_ = j.at("trunc").get<int>();
    for (const auto& term : j.at("terms"))
        f.insert(term.at(0).get<int>(), scalar_from_json(term.at(1)));
    return f;
}

} // namespace cscalc
