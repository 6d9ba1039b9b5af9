#include "cscalc/scalar.hpp"

#include "cscalc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cscalc {

Scalar Scalar::pi_term(int e, Cyclo24 c)
{
    Scalar s;
    if (!c.is_zero())
        s.terms_.emplace_back(e, std::move(c));
    return s;
}

bool Scalar::is_rational() const
{
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_rational();
}

Rat Scalar::rational_part() const
{
    if (terms_.empty())
        return Rat(0);
    return terms_[0].second.rational_part();
}

bool Scalar::is_pi_homogeneous(int expected) const
{
    for (const auto& [e, c] : terms_)
        if (e != expected)
            return false;
    return true;
}

std::optional<int> Scalar::pi_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int e = terms_[0].first;
    for (const auto& t : terms_)
        if (t.first != e)
            return std::nullopt;
    return e;
}

Scalar Scalar::operator-() const
{
    Scalar r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_back(e, -c);
    return r;
}

void Scalar::insert(int e, const Cyclo24& c)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, int key) { return t.first < key; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, {e, c});
    }
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    for (const auto& [e, c] : o.terms_)
        insert(e, c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Cyclo24 p = ca * cb;
            if (!p.is_zero())
                r.insert(ea + eb, p);
        }
    return r;
}

Scalar Scalar::inverse() const
{
    if (terms_.size() != 1)
        throw InvalidInverse("Scalar: inverse requires a single pi-monomial");
    Scalar r;
    r.terms_.emplace_back(-terms_[0].first, terms_[0].second.inverse());
    return r;
}

std::complex<double> Scalar::eval(double pi_value) const
{
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_)
        acc += std::pow(pi_value, e) * c.to_complex();
    return acc;
}

std::string Scalar::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (e == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (needs_parens) {
                os << "(" << cs << ")*";
            } else {
                os << cs << "*";
            }
            os << "pi";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

} // namespace cscalc
