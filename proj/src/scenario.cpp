#include "cscalc/scenario.hpp"

#include "cscalc/errors.hpp"

#include <nlohmann/json.hpp>

namespace cscalc {

uint64_t Rng::next()
{
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi)
{
    return lo + (int)(next() % (uint64_t)(hi - lo + 1));
}

int Rng::nonzero(int mag)
{
    int v = uniform(1, mag);
    return chance(50) ? v : -v;
}

bool Rng::chance(int percent) { return (int)(next() % 100) < percent; }

namespace {

Mono random_mono(int m, int cap, Rng& rng)
{
    Mono mono;
    int deg = rng.uniform(0, cap);
    for (int d = 0; d < deg; ++d) {
        int v = rng.uniform(0, m - 1);
        if (mono.e[v] == 255)
            continue;
        mono.e[v]++;
    }
    return mono;
}

FormSeries random_one_form(int m, int cap, Rng& rng)
{
    FormSeries f(m);
    int terms = rng.uniform(1, 2);
    for (int t = 0; t < terms; ++t) {
        int dx = rng.uniform(0, m - 1);
        f.add_term((uint16_t)(1u << dx), random_mono(m, cap, rng),
                   QSeries(Scalar(Rat(rng.nonzero(2)))));
    }
    return f;
}

} // namespace

MatrixForm random_connection(int m, int n, int cap, Rng& rng, int density_pct)
{
    MatrixForm A(n, m);
    bool any = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.chance(density_pct)) {
                A.at(i, j) = random_one_form(m, cap, rng);
                any = true;
            }
    if (!any)
        A.at(0, 0) = random_one_form(m, cap, rng);
    return A;
}

MatrixForm random_so_connection(int m, int n, int cap, Rng& rng, int density_pct)
{
    MatrixForm A(n, m);
    bool any = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(density_pct)) {
                FormSeries f = random_one_form(m, cap, rng);
                A.at(i, j) = f;
                A.at(j, i) = -f;
                any = true;
            }
    if (!any && n >= 2) {
        FormSeries f = random_one_form(m, cap, rng);
        A.at(0, 1) = f;
        A.at(1, 0) = -f;
    }
    return A;
}

ScenarioSpec random_scenario(int m, int n, int cap, uint64_t seed, bool so_n)
{
    Rng rng(seed);
    ScenarioSpec s;
    s.m = m;
    s.n = n;
    s.degree_cap = cap;
    s.A0 = so_n ? random_so_connection(m, n, cap, rng) : random_connection(m, n, cap, rng);
    s.A1 = so_n ? random_so_connection(m, n, cap, rng) : random_connection(m, n, cap, rng);
    return s;
}

FormSeries poly_det(const MatrixForm& g)
{
    const int n = g.n();
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i)
        cols[i] = i;
    // Cofactor expansion down the first row of the remaining minor.
    std::function<FormSeries(int, std::vector<int>)> det = [&](int row, std::vector<int> cs) {
        if (cs.size() == 1)
            return g.at(row, cs[0]);
        FormSeries acc(g.chart_dim());
        for (size_t k = 0; k < cs.size(); ++k) {
            if (g.at(row, cs[k]).is_zero())
                continue;
            std::vector<int> rest;
            for (size_t l = 0; l < cs.size(); ++l)
                if (l != k)
                    rest.push_back(cs[l]);
            FormSeries sub = det(row + 1, rest);
            FormSeries term = g.at(row, cs[k]) * sub;
            acc += (k % 2 == 0) ? term : -term;
        }
        return acc;
    };
    return det(0, cols);
}

MatrixForm poly_adjugate(const MatrixForm& g)
{
    const int n = g.n();
    MatrixForm adj(n, g.chart_dim());
    if (n == 1) {
        adj.at(0, 0) = FormSeries::constant(g.chart_dim(), QSeries::one());
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // Minor of g with row i, column j removed.
            MatrixForm minor(n - 1, g.chart_dim());
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i)
                    continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor.at(rr, cc) = g.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            FormSeries cof = poly_det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

ScenarioSpec gen_flat_pair(int m, int n, uint64_t seed, int shears)
{
    const int max_attempts = 40;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(seed + 0x5851f42d4c957f2dULL * (uint64_t)attempt);
        MatrixForm g = MatrixForm::identity(n, m);
        for (int s = 0; s < shears; ++s) {
            int i = rng.uniform(0, n - 1);
            int j = rng.uniform(0, n - 1);
            if (i == j)
                j = (j + 1) % n;
            Mono mono = random_mono(m, 2, rng);
            if (mono.is_one())
                mono = Mono::var(rng.uniform(0, m - 1));
            MatrixForm shear = MatrixForm::identity(n, m);
            shear.at(i, j) = FormSeries(m);
            shear.at(i, j).add_term(0, mono, QSeries(Scalar(Rat(rng.nonzero(2)))));
            g = g * shear;
        }
        FormSeries detg = poly_det(g);
        if (!(detg == FormSeries::constant(m, QSeries::one())))
            throw CalcError("gen_flat_pair: shear product is not unimodular");
        MatrixForm ginv = poly_adjugate(g);
        MatrixForm A1 = ginv * g.d();

        ScenarioSpec s;
        s.m = m;
        s.n = n;
        s.degree_cap = 2;
        s.claims_flat = true;
        s.A0 = MatrixForm(n, m);
        s.A1 = A1;
        if (shears == 0)
            return s;
        if (m >= 7) {
            auto pw = matrix_powers(A1, 7);
            if (pw.size() <= 7 || pw[7].trace().is_zero())
                continue; // degenerate draw, retry with a derived seed
        }
        if (A1.is_zero())
            continue;
        return s;
    }
    throw DegenerateScenario("gen_flat_pair: no non-degenerate draw found");
}

namespace {

nlohmann::json matrix_to_json(const MatrixForm& A, int m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < A.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < A.n(); ++j) {
            nlohmann::json entry = nlohmann::json::array();
            for (const auto& [key, q] : A.at(i, j).canonical_terms()) {
                nlohmann::json coords = nlohmann::json::array();
                for (int v = 0; v < m; ++v)
                    coords.push_back((int)key.mono.e[v]);
                nlohmann::json form = nlohmann::json::array();
                for (int v = 0; v < m; ++v)
                    if (key.mask & (1u << v))
                        form.push_back(v + 1);
                for (const auto& [k, c] : q.terms()) {
                    nlohmann::json term{{"coords", coords}, {"form", form},
                                        {"coeff", scalar_to_json(c)}};
                    if (k != 0)
                        term["q"] = k;
                    entry.push_back(term);
                }
            }
            row.push_back(entry);
        }
        rows.push_back(row);
    }
    return rows;
}

MatrixForm matrix_from_json(const nlohmann::json& j, int m, int n, const std::string& where)
{
    if (!j.is_array() || (int)j.size() != n)
        throw CalcError("scenario: " + where + " must be an " + std::to_string(n) + "-row array");
    MatrixForm A(n, m);
    for (int i = 0; i < n; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || (int)row.size() != n)
            throw CalcError("scenario: " + where + "/" + std::to_string(i) + " must have " +
                            std::to_string(n) + " entries");
        for (int jj = 0; jj < n; ++jj) {
            for (const auto& term : row.at(jj)) {
                std::string path =
                    where + "/" + std::to_string(i) + "/" + std::to_string(jj);
                const auto& coords = term.at("coords");
                if ((int)coords.size() != m)
                    throw CalcError("scenario: " + path + ": coords must have length m");
                Mono mono;
                for (int v = 0; v < m; ++v) {
                    int e = coords.at(v).get<int>();
                    if (e < 0 || e > 255)
                        throw CalcError("scenario: " + path + ": bad exponent");
                    mono.e[v] = (uint8_t)e;
                }
                const auto& form = term.at("form");
                if (form.size() != 1)
                    throw CalcError("scenario: " + path + ": connection entries must be 1-forms");
                int idx = form.at(0).get<int>();
                if (idx < 1 || idx > m)
                    throw CalcError("scenario: " + path + ": form index out of range");
                Scalar c = scalar_from_json(term.at("coeff"));
                int qexp = term.contains("q") ? term.at("q").get<int>() : 0;
                A.at(i, jj).add_term((uint16_t)(1u << (idx - 1)), mono,
                                     QSeries::monomial(qexp, c));
            }
        }
    }
    return A;
}

} // namespace

nlohmann::json ScenarioSpec::to_json() const
{
    return nlohmann::json{{"m", m},
                          {"n", n},
                          {"degree_cap", degree_cap},
                          {"claims_flat", claims_flat},
                          {"A0", matrix_to_json(A0, m)},
                          {"A1", matrix_to_json(A1, m)}};
}

ScenarioSpec ScenarioSpec::from_json(const nlohmann::json& j)
{
    ScenarioSpec s;
    s.m = j.at("m").get<int>();
    s.n = j.at("n").get<int>();
    if (s.m < 1 || s.m > Mono::MaxVars)
        throw CalcError("scenario: m out of range");
    if (s.n < 1 || s.n > 16)
        throw CalcError("scenario: n out of range");
    s.degree_cap = j.value("degree_cap", 2);
    s.claims_flat = j.value("claims_flat", false);
    s.A0 = matrix_from_json(j.at("A0"), s.m, s.n, "/A0");
    s.A1 = matrix_from_json(j.at("A1"), s.m, s.n, "/A1");
    return s;
}

} // namespace cscalc
