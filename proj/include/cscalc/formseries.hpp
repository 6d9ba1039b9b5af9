#pragma once

#include "cscalc/qseries.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace cscalc {

/// Monomial in the chart coordinates x_1..x_m (slots 0..13) and the
/// deformation parameter t (slot 15). t is inert under the exterior
/// derivative and is eliminated by integrate_t01.
struct Mono {
    static constexpr int MaxVars = 14;
    static constexpr int TSlot = 15;
    std::array<uint8_t, 16> e{};

    static Mono one() { return {}; }
    static Mono var(int v, int power = 1)
    {
        Mono m;
        m.e[v] = (uint8_t)power;
        return m;
    }
    static Mono t_power(int k)
    {
        Mono m;
        m.e[TSlot] = (uint8_t)k;
        return m;
    }

    int tdeg() const { return e[TSlot]; }
    bool is_one() const;
    friend Mono operator*(const Mono& a, const Mono& b);
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }
};

struct FormKey {
    uint16_t mask = 0; // strictly increasing index subset as a bitset
    Mono mono;
    friend bool operator==(const FormKey& a, const FormKey& b)
    {
        return a.mask == b.mask && a.mono == b.mono;
    }
};

struct FormKeyHash {
    size_t operator()(const FormKey& k) const;
};

/// Sign of dx_I ^ dx_J for disjoint increasing subsets; 0 when they overlap.
int wedge_sign(uint16_t I, uint16_t J);

/// Differential form on a formal m-dimensional chart. Coefficients are
/// polynomials in the chart coordinates (and t) with QSeries values; the
/// grading is carried by the index-subset bitmask.
class FormSeries {
public:
    FormSeries() = default;
    explicit FormSeries(int m)
        : m_(m)
    {
    }

    static FormSeries constant(int m, QSeries c);
    static FormSeries zero(int m) { return FormSeries(m); }

    int chart_dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(uint16_t mask, const Mono& mono, const QSeries& q);
    const std::unordered_map<FormKey, QSeries, FormKeyHash>& terms() const { return terms_; }

    FormSeries operator-() const;
    FormSeries& operator+=(const FormSeries& o);
    FormSeries& operator-=(const FormSeries& o);
    friend FormSeries operator+(FormSeries a, const FormSeries& b) { return a += b; }
    friend FormSeries operator-(FormSeries a, const FormSeries& b) { return a -= b; }
    /// Wedge product (graded-commutative).
    friend FormSeries operator*(const FormSeries& a, const FormSeries& b);
    FormSeries& operator*=(const FormSeries& o) { return *this = *this * o; }

    FormSeries scaled(const QSeries& f) const;
    FormSeries scaled(const Scalar& s) const;
    FormSeries scaled(const Rat& r) const;

    /// Exterior derivative; ignores t.
    FormSeries d() const;

    /// Multiplies by t^k.
    FormSeries times_t(int k = 1) const;
    /// Exact integral over t in [0,1]: t^k -> 1/(k+1).
    FormSeries integrate_t01() const;
    int max_tdeg() const;

    /// Terms of form degree k only.
    FormSeries component(int k) const;
    int max_degree() const;
    bool even_degrees_only() const;
    bool odd_degrees_only() const;

    /// Every coefficient of every degree-k component is pi-homogeneous of
    /// degree pi_of_degree(k).
    bool pi_homogeneous(const std::function<int(int)>& pi_of_degree) const;

    /// Re-truncates every coefficient.
    FormSeries truncated(int n) const;

    friend bool operator==(const FormSeries& a, const FormSeries& b);

    /// Canonically ordered terms (by degree, mask, monomial) for printing,
    /// hashing into reports, and stable JSON output.
    std::vector<std::pair<FormKey, QSeries>> canonical_terms() const;

    std::string to_string() const;

private:
    int m_ = 0;
    std::unordered_map<FormKey, QSeries, FormKeyHash> terms_;
};

} // namespace cscalc
