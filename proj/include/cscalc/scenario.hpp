#pragma once

#include "cscalc/matrixform.hpp"

#include <cstdint>
#include <nlohmann/json_fwd.hpp>

namespace cscalc {

/// splitmix64; raw modulo draws keep scenario generation reproducible across
/// platforms (std:: distributions are not portable).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed)
        : state(seed)
    {
    }
    uint64_t next();
    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    /// Nonzero integer in [-mag, mag].
    int nonzero(int mag);
    bool chance(int percent);
};

struct ScenarioSpec {
    int m = 0;  // chart dimension
    int n = 0;  // matrix rank
    int degree_cap = 2;
    bool claims_flat = false;
    MatrixForm A0, A1;

    ConnectionPair pair() const { return ConnectionPair(A0, A1, claims_flat); }

    nlohmann::json to_json() const;
    static ScenarioSpec from_json(const nlohmann::json& j);
};

/// Sparse random matrix of 1-forms with polynomial coefficients of degree
/// <= cap. density_pct controls how many entries are populated.
MatrixForm random_connection(int m, int n, int cap, Rng& rng, int density_pct = 60);

/// Antisymmetric variant (so(n)-valued); its curvature has vanishing odd
/// power traces, which the two-route characteristic form checks rely on.
MatrixForm random_so_connection(int m, int n, int cap, Rng& rng, int density_pct = 60);

ScenarioSpec random_scenario(int m, int n, int cap, uint64_t seed, bool so_n = false);

/// Flat pair: A0 = 0, A1 = g^{-1} dg for g a product of `shears` elementary
/// unimodular matrices I + p(x) E_{ij}. The inverse is the adjugate (det g
/// is exactly 1). For m >= 7, redraws until tr[A^7] != 0, then fails with
/// DegenerateScenario after bounded retries.
ScenarioSpec gen_flat_pair(int m, int n, uint64_t seed, int shears);

/// Determinant of a matrix of 0-forms by cofactor expansion.
FormSeries poly_det(const MatrixForm& g);
/// adj(g) with g * adj(g) = det(g) * I, entries 0-forms.
MatrixForm poly_adjugate(const MatrixForm& g);

} // namespace cscalc
