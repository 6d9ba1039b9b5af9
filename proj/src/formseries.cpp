#include "cscalc/formseries.hpp"

#include "cscalc/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <sstream>

namespace cscalc {

bool Mono::is_one() const
{
    for (auto v : e)
        if (v)
            return false;
    return true;
}

Mono operator*(const Mono& a, const Mono& b)
{
    Mono r;
    for (int i = 0; i < 16; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 255)
            throw CalcError("Mono: exponent overflow");
        r.e[i] = (uint8_t)s;
    }
    return r;
}

size_t FormKeyHash::operator()(const FormKey& k) const
{
    uint64_t w0, w1;
    std::memcpy(&w0, k.mono.e.data(), 8);
    std::memcpy(&w1, k.mono.e.data() + 8, 8);
    uint64_t h = k.mask;
    auto mix = [](uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    h = mix(h ^ mix(w0) ^ (mix(w1) << 1));
    return (size_t)h;
}

int wedge_sign(uint16_t I, uint16_t J)
{
    if (I & J)
        return 0;
    int cnt = 0;
    uint32_t j = J;
    while (j) {
        int b = std::countr_zero(j);
        cnt += std::popcount((uint32_t)(I >> (b + 1)));
        j &= j - 1;
    }
    return (cnt & 1) ? -1 : 1;
}

FormSeries FormSeries::constant(int m, QSeries c)
{
    FormSeries f(m);
    f.add_term(0, Mono::one(), c);
    return f;
}

void FormSeries::add_term(uint16_t mask, const Mono& mono, const QSeries& q)
{
    if (q.is_zero())
        return;
    FormKey key{mask, mono};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, q);
    } else {
        it->second += q;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

FormSeries FormSeries::operator-() const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_)
        r.terms_.emplace(k, -q);
    return r;
}

FormSeries& FormSeries::operator+=(const FormSeries& o)
{
    if (m_ == 0)
        m_ = o.m_;
    else if (o.m_ != 0 && o.m_ != m_)
        throw ShapeError("FormSeries: chart dimension mismatch");
    for (const auto& [k, q] : o.terms_)
        add_term(k.mask, k.mono, q);
    return *this;
}

FormSeries& FormSeries::operator-=(const FormSeries& o)
{
    if (m_ == 0)
        m_ = o.m_;
    else if (o.m_ != 0 && o.m_ != m_)
        throw ShapeError("FormSeries: chart dimension mismatch");
    for (const auto& [k, q] : o.terms_)
        add_term(k.mask, k.mono, -q);
    return *this;
}

FormSeries operator*(const FormSeries& a, const FormSeries& b)
{
    if (a.m_ != b.m_ && a.m_ != 0 && b.m_ != 0)
        throw ShapeError("FormSeries: chart dimension mismatch");
    FormSeries r(a.m_ ? a.m_ : b.m_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    const bool a_small = a.terms_.size() <= b.terms_.size();
    const auto& outer = a_small ? a.terms_ : b.terms_;
    const auto& inner = a_small ? b.terms_ : a.terms_;
    for (const auto& [ko, qo] : outer) {
        for (const auto& [ki, qi] : inner) {
            const FormKey& ka = a_small ? ko : ki;
            const FormKey& kb = a_small ? ki : ko;
            int sign = wedge_sign(ka.mask, kb.mask);
            if (sign == 0)
                continue;
            QSeries q = (a_small ? qo : qi) * (a_small ? qi : qo);
            if (q.is_zero())
                continue;
            if (sign < 0)
                q = -q;
            r.add_term(ka.mask | kb.mask, ka.mono * kb.mono, q);
        }
    }
    return r;
}

FormSeries FormSeries::scaled(const QSeries& f) const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_) {
        QSeries p = q * f;
        if (!p.is_zero())
            r.terms_.emplace(k, std::move(p));
    }
    return r;
}

FormSeries FormSeries::scaled(const Scalar& s) const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_) {
        QSeries p = q.scaled(s);
        if (!p.is_zero())
            r.terms_.emplace(k, std::move(p));
    }
    return r;
}

FormSeries FormSeries::scaled(const Rat& c) const { return scaled(Scalar(c)); }

FormSeries FormSeries::d() const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_) {
        for (int v = 0; v < m_; ++v) {
            int ev = k.mono.e[v];
            if (ev == 0 || (k.mask & (1u << v)))
                continue;
            Mono nm = k.mono;
            nm.e[v] = (uint8_t)(ev - 1);
            int sign = (std::popcount((uint32_t)(k.mask & ((1u << v) - 1))) & 1) ? -1 : 1;
            r.add_term(k.mask | (1u << v), nm, q.scaled(Scalar(Rat(sign * ev))));
        }
    }
    return r;
}

FormSeries FormSeries::times_t(int k) const
{
    FormSeries r(m_);
    Mono tk = Mono::t_power(k);
    for (const auto& [key, q] : terms_)
        r.terms_.emplace(FormKey{key.mask, key.mono * tk}, q);
    return r;
}

FormSeries FormSeries::integrate_t01() const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_) {
        int td = k.mono.tdeg();
        Mono nm = k.mono;
        nm.e[Mono::TSlot] = 0;
        r.add_term(k.mask, nm, q.scaled(Scalar(Rat(1, td + 1))));
    }
    return r;
}

int FormSeries::max_tdeg() const
{
    int d = 0;
    for (const auto& [k, q] : terms_)
        d = std::max(d, k.mono.tdeg());
    return d;
}

FormSeries FormSeries::component(int deg) const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_)
        if (std::popcount((uint32_t)k.mask) == deg)
            r.terms_.emplace(k, q);
    return r;
}

int FormSeries::max_degree() const
{
    int d = -1;
    for (const auto& [k, q] : terms_)
        d = std::max(d, std::popcount((uint32_t)k.mask));
    return d;
}

bool FormSeries::even_degrees_only() const
{
    for (const auto& [k, q] : terms_)
        if (std::popcount((uint32_t)k.mask) % 2)
            return false;
    return true;
}

bool FormSeries::odd_degrees_only() const
{
    for (const auto& [k, q] : terms_)
        if (std::popcount((uint32_t)k.mask) % 2 == 0)
            return false;
    return true;
}

bool FormSeries::pi_homogeneous(const std::function<int(int)>& pi_of_degree) const
{
    for (const auto& [k, q] : terms_)
        if (!q.is_pi_homogeneous(pi_of_degree(std::popcount((uint32_t)k.mask))))
            return false;
    return true;
}

FormSeries FormSeries::truncated(int n) const
{
    FormSeries r(m_);
    for (const auto& [k, q] : terms_) {
        QSeries p = q.truncated(n);
        if (!p.is_zero())
            r.terms_.emplace(k, std::move(p));
    }
    return r;
}

bool operator==(const FormSeries& a, const FormSeries& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (const auto& [k, q] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || !(it->second == q))
            return false;
    }
    return true;
}

std::vector<std::pair<FormKey, QSeries>> FormSeries::canonical_terms() const
{
    std::vector<std::pair<FormKey, QSeries>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = std::popcount((uint32_t)a.first.mask);
        int db = std::popcount((uint32_t)b.first.mask);
        if (da != db)
            return da < db;
        if (a.first.mask != b.first.mask)
            return a.first.mask < b.first.mask;
        return a.first.mono < b.first.mono;
    });
    return v;
}

std::string FormSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : canonical_terms()) {
        if (!first)
            os << "\n";
        first = false;
        bool any = false;
        for (int v = 0; v < m_; ++v)
            if (k.mono.e[v]) {
                if (any)
                    os << "*";
                any = true;
                os << "x" << (v + 1);
                if (k.mono.e[v] > 1)
                    os << "^" << (int)k.mono.e[v];
            }
        if (k.mono.tdeg()) {
            if (any)
                os << "*";
            any = true;
            os << "t";
            if (k.mono.tdeg() > 1)
                os << "^" << k.mono.tdeg();
        }
        for (int v = 0; v < m_; ++v)
            if (k.mask & (1u << v)) {
                if (any)
                    os << "^";
                any = true;
                os << "dx" << (v + 1);
            }
        if (!any)
            os << "1";
        os << " : " << q.to_string();
    }
    return os.str();
}

} // namespace cscalc
