#include "cscalc/csforms.hpp"
#include "cscalc/errors.hpp"
#include "cscalc/suites.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

using namespace cscalc;

namespace {

int write_output(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    out << content;
    return 0;
}

GenusKind parse_kind(const std::string& s)
{
    if (s == "phiL")
        return GenusKind::PhiL;
    if (s == "phiW")
        return GenusKind::PhiW;
    if (s == "phiWp")
        return GenusKind::PhiWPrime;
    if (s == "psiW")
        return GenusKind::PsiW;
    throw CLI::ValidationError("--kind", "expected one of phiL|phiW|phiWp|psiW");
}

nlohmann::json form_to_json(const FormSeries& f, int m)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, q] : f.canonical_terms()) {
        nlohmann::json coords = nlohmann::json::array();
        for (int v = 0; v < m; ++v)
            coords.push_back((int)key.mono.e[v]);
        nlohmann::json form = nlohmann::json::array();
        for (int v = 0; v < m; ++v)
            if (key.mask & (1u << v))
                form.push_back(v + 1);
        arr.push_back({{"coords", coords}, {"form", form}, {"q", q.to_json()}});
    }
    return arr;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Chern-Weil / Chern-Simons form calculator and verifier"};
    app.require_subcommand(1);

    // ---- theta-expand ----
    auto* theta_cmd = app.add_subcommand("theta-expand", "print theta or modular-form expansions");
    std::string theta_kind = "theta", form_name;
    int wdeg = 3, qorder = 72;
    theta_cmd->add_option("--kind", theta_kind, "theta|theta1|theta2|theta3");
    theta_cmd->add_option("--form", form_name, "delta1|delta2|delta3|eps1|eps2|eps3|e4|eta");
    theta_cmd->add_option("--wdeg", wdeg, "w-degree truncation");
    theta_cmd->add_option("--qorder", qorder, "q-order in 1/24 units");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", out_path;
    SuiteOptions opts;
    bool as_json = false;
    verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--seed", opts.seed, "scenario seed");
    verify_cmd->add_option("--qorder", opts.qorder, "q-order in 1/24 units");
    verify_cmd->add_option("--m", opts.m, "chart dimension override");
    verify_cmd->add_option("--n", opts.n, "matrix rank override");
    verify_cmd->add_option("--degree-cap", opts.degree_cap, "polynomial degree cap");
    verify_cmd->add_option("--shears", opts.shears, "flat generator shear count");
    verify_cmd->add_option("--terms", opts.terms, "numeric product terms");
    verify_cmd->add_option("--tol", opts.tol, "numeric tolerance");
    verify_cmd->add_option("--threads", opts.threads, "work pool size");
    verify_cmd->add_option("--out", out_path, "write JSON report to file");
    verify_cmd->add_flag("--json", as_json, "print JSON instead of text");

    // ---- cs-compute ----
    auto* cs_cmd = app.add_subcommand("cs-compute", "compute a CS form for a scenario file");
    std::string scenario_path, cs_kind = "psiW", cs_out;
    int cs_qorder = 72;
    cs_cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    cs_cmd->add_option("--kind", cs_kind, "phiL|phiW|phiWp|psiW");
    cs_cmd->add_option("--qorder", cs_qorder, "q-order in 1/24 units");
    cs_cmd->add_option("--out", cs_out, "write JSON to file");

    // ---- scenario ----
    auto* scen_cmd = app.add_subcommand("scenario", "generate or validate scenario files");
    auto* gen_cmd = scen_cmd->add_subcommand("gen", "generate a reproducible scenario");
    bool gen_flat = false, gen_so = false;
    int gen_m = 7, gen_n = 3, gen_cap = 2, gen_shears = 8;
    uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_flag("--flat", gen_flat, "flat pair from unimodular shears");
    gen_cmd->add_flag("--so", gen_so, "antisymmetric connections");
    gen_cmd->add_option("--m", gen_m, "chart dimension");
    gen_cmd->add_option("--n", gen_n, "matrix rank");
    gen_cmd->add_option("--degree-cap", gen_cap, "polynomial degree cap");
    gen_cmd->add_option("--shears", gen_shears, "shear count for --flat");
    gen_cmd->add_option("--seed", gen_seed, "seed");
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
    auto* val_cmd = scen_cmd->add_subcommand("validate", "validate a scenario file");
    std::string val_path;
    val_cmd->add_option("file", val_path, "scenario JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*theta_cmd) {
            if (!form_name.empty()) {
                ModularFormTable t = modular_table(std::max(qorder, 72));
                const QSeries* f = nullptr;
                if (form_name == "delta1") f = &t.delta[0];
                else if (form_name == "delta2") f = &t.delta[1];
                else if (form_name == "delta3") f = &t.delta[2];
                else if (form_name == "eps1") f = &t.eps[0];
                else if (form_name == "eps2") f = &t.eps[1];
                else if (form_name == "eps3") f = &t.eps[2];
                else if (form_name == "e4") f = &t.e4;
                else if (form_name == "eta") f = &t.eta;
                if (!f) {
                    std::cerr << "unknown --form " << form_name << "\n";
                    return 2;
                }
                std::cout << f->truncated(qorder).to_string() << "\n";
                return 0;
            }
            ThetaKind k;
            if (theta_kind == "theta") k = ThetaKind::Theta;
            else if (theta_kind == "theta1") k = ThetaKind::Theta1;
            else if (theta_kind == "theta2") k = ThetaKind::Theta2;
            else if (theta_kind == "theta3") k = ThetaKind::Theta3;
            else {
                std::cerr << "unknown --kind " << theta_kind << "\n";
                return 2;
            }
            if (wdeg < 1 || qorder < 24) {
                std::cerr << "need --wdeg >= 1 and --qorder >= 24\n";
                return 2;
            }
            std::cout << theta_expand(k, wdeg, qorder).to_string() << "\n";
            return 0;
        }

        if (*verify_cmd) {
            SuiteReport rep = run_suite(suite, opts);
            if (!out_path.empty()) {
                int rc = write_output(out_path, rep.to_json().dump(2) + "\n");
                if (rc)
                    return rc;
            }
            std::cout << (as_json ? rep.to_json().dump(2) + "\n" : rep.to_text());
            return rep.all_pass() ? 0 : 1;
        }

        if (*cs_cmd) {
            std::ifstream in(scenario_path);
            if (!in) {
                std::cerr << "cannot read " << scenario_path << "\n";
                return 2;
            }
            nlohmann::json j = nlohmann::json::parse(in);
            ScenarioSpec spec = ScenarioSpec::from_json(j);
            CsResult r = cs_form(parse_kind(cs_kind), spec.pair(), cs_qorder);
            nlohmann::json out{{"kind", cs_kind},
                               {"qorder", cs_qorder},
                               {"m", spec.m},
                               {"n", spec.n},
                               {"form", form_to_json(r.form, spec.m)}};
            std::string text = out.dump(2) + "\n";
            if (!cs_out.empty())
                return write_output(cs_out, text);
            std::cout << text;
            return 0;
        }

        if (*gen_cmd) {
            ScenarioSpec spec = gen_flat
                                    ? gen_flat_pair(gen_m, gen_n, gen_seed, gen_shears)
                                    : random_scenario(gen_m, gen_n, gen_cap, gen_seed, gen_so);
            std::string text = spec.to_json().dump(2) + "\n";
            if (!gen_out.empty())
                return write_output(gen_out, text);
            std::cout << text;
            return 0;
        }

        if (*val_cmd) {
            std::ifstream in(val_path);
            if (!in) {
                std::cerr << "cannot read " << val_path << "\n";
                return 2;
            }
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const std::exception& e) {
                std::cerr << "invalid JSON: " << e.what() << "\n";
                return 2;
            }
            ScenarioSpec spec;
            try {
                spec = ScenarioSpec::from_json(j);
            } catch (const std::exception& e) {
                std::cerr << "schema violation: " << e.what() << "\n";
                return 2;
            }
            try {
                spec.pair(); // verifies claims_flat
            } catch (const FlatnessViolation& e) {
                // Point at the first nonzero curvature entry.
                MatrixForm r1 = curvature(spec.A1);
                MatrixForm r0 = curvature(spec.A0);
                for (int i = 0; i < spec.n; ++i)
                    for (int jj = 0; jj < spec.n; ++jj)
                        if (!r0.at(i, jj).is_zero() || !r1.at(i, jj).is_zero()) {
                            std::cerr << "claims_flat violated: curvature entry (" << i << ","
                                      << jj << ") is nonzero\n";
                            return 1;
                        }
                std::cerr << e.what() << "\n";
                return 1;
            }
            std::cout << "scenario ok: m=" << spec.m << " n=" << spec.n
                      << (spec.claims_flat ? " (flat)" : "") << "\n";
            return 0;
        }
    } catch (const CalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
