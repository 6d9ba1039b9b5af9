#include "cscalc/numeric.hpp"

#include <cmath>

namespace cscalc {

namespace {

constexpr Cplx I{0.0, 1.0};

Cplx qpow(Cplx tau, double e24)
{
    // q^{e24/24} with q = e^{2 pi i tau}
    return std::exp(2.0 * M_PI * I * tau * (e24 / 24.0));
}

} // namespace

ThetaVal theta_eval(ThetaKind kind, Cplx v, Cplx tau, const NumericConfig& cfg)
{
    const Cplx q = std::exp(2.0 * M_PI * I * tau);
    const Cplx zp = std::exp(2.0 * M_PI * I * v);
    const Cplx zm = std::exp(-2.0 * M_PI * I * v);
    const bool half = (kind == ThetaKind::Theta2 || kind == ThetaKind::Theta3);
    const double sgn = (kind == ThetaKind::Theta || kind == ThetaKind::Theta2) ? -1.0 : 1.0;

    Cplx prod = 1.0;
    Cplx dlog = 0.0; // d/dv log(product)
    // q^{1/2} via exp keeps the branch tied to tau rather than to q.
    Cplx qj = half ? std::exp(M_PI * I * tau) : q;
    Cplx qfull = 1.0;
    for (int j = 1; j <= cfg.product_terms; ++j) {
        qfull *= q;
        prod *= (1.0 - qfull);
        Cplx fp = 1.0 + sgn * zp * qj;
        Cplx fm = 1.0 + sgn * zm * qj;
        prod *= fp * fm;
        dlog += sgn * 2.0 * M_PI * I * (zp * qj / fp - zm * qj / fm);
        qj *= q;
    }

    ThetaVal r;
    switch (kind) {
    case ThetaKind::Theta: {
        Cplx pref = 2.0 * qpow(tau, 3.0);
        r.value = pref * std::sin(M_PI * v) * prod;
        r.dv = pref * (M_PI * std::cos(M_PI * v) * prod + std::sin(M_PI * v) * prod * dlog);
        break;
    }
    case ThetaKind::Theta1: {
        Cplx pref = 2.0 * qpow(tau, 3.0);
        r.value = pref * std::cos(M_PI * v) * prod;
        r.dv = pref * (-M_PI * std::sin(M_PI * v) * prod + std::cos(M_PI * v) * prod * dlog);
        break;
    }
    default:
        r.value = prod;
        r.dv = prod * dlog;
        break;
    }
    return r;
}

Cplx theta_prime0(Cplx tau, const NumericConfig& cfg)
{
    return theta_eval(ThetaKind::Theta, 0.0, tau, cfg).dv;
}

Cplx eval_qseries(const QSeries& f, Cplx tau)
{
    Cplx acc = 0.0;
    for (const auto& [k, c] : f.terms())
        acc += c.eval(M_PI) * qpow(tau, (double)k);
    return acc;
}

Cplx delta_eval(int i, Cplx tau, const NumericConfig& cfg)
{
    Cplx t1 = theta_eval(ThetaKind::Theta1, 0.0, tau, cfg).value;
    Cplx t2 = theta_eval(ThetaKind::Theta2, 0.0, tau, cfg).value;
    Cplx t3 = theta_eval(ThetaKind::Theta3, 0.0, tau, cfg).value;
    auto p4 = [](Cplx z) { return z * z * z * z; };
    switch (i) {
    case 1: return (p4(t2) + p4(t3)) / 8.0;
    case 2: return -(p4(t1) + p4(t3)) / 8.0;
    default: return (p4(t1) - p4(t2)) / 8.0;
    }
}

Cplx eps_eval(int i, Cplx tau, const NumericConfig& cfg)
{
    Cplx t1 = theta_eval(ThetaKind::Theta1, 0.0, tau, cfg).value;
    Cplx t2 = theta_eval(ThetaKind::Theta2, 0.0, tau, cfg).value;
    Cplx t3 = theta_eval(ThetaKind::Theta3, 0.0, tau, cfg).value;
    auto p4 = [](Cplx z) { return z * z * z * z; };
    switch (i) {
    case 1: return p4(t2) * p4(t3) / 16.0;
    case 2: return p4(t1) * p4(t3) / 16.0;
    default: return -p4(t1) * p4(t2) / 16.0;
    }
}

std::vector<LawCheck> check_transformations(const NumericConfig& cfg)
{
    std::vector<LawCheck> out;
    auto add = [&](const std::string& law, Cplx lhs, Cplx rhs) {
        double denom = std::max(1.0, std::abs(rhs));
        out.push_back({law, std::abs(lhs - rhs) / denom});
    };
    const Cplx e_pi_i_4 = std::exp(M_PI * I / 4.0);

    for (Cplx tau : cfg.tau_samples) {
        const Cplx stau = -1.0 / tau;
        const Cplx root = std::sqrt(tau / I);
        for (Cplx v : cfg.v_samples) {
            auto th = [&](ThetaKind k, Cplx vv, Cplx tt) { return theta_eval(k, vv, tt, cfg); };
            Cplx gauss = std::exp(M_PI * I * tau * v * v);

            // T laws, values and derivatives
            add("theta(v,tau+1) = e^{pi i/4} theta(v,tau)", th(ThetaKind::Theta, v, tau + 1.0).value,
                e_pi_i_4 * th(ThetaKind::Theta, v, tau).value);
            add("theta1(v,tau+1) = e^{pi i/4} theta1(v,tau)",
                th(ThetaKind::Theta1, v, tau + 1.0).value,
                e_pi_i_4 * th(ThetaKind::Theta1, v, tau).value);
            add("theta2(v,tau+1) = theta3(v,tau)", th(ThetaKind::Theta2, v, tau + 1.0).value,
                th(ThetaKind::Theta3, v, tau).value);
            add("theta3(v,tau+1) = theta2(v,tau)", th(ThetaKind::Theta3, v, tau + 1.0).value,
                th(ThetaKind::Theta2, v, tau).value);
            add("theta'(v,tau+1) = e^{pi i/4} theta'(v,tau)", th(ThetaKind::Theta, v, tau + 1.0).dv,
                e_pi_i_4 * th(ThetaKind::Theta, v, tau).dv);
            add("theta2'(v,tau+1) = theta3'(v,tau)", th(ThetaKind::Theta2, v, tau + 1.0).dv,
                th(ThetaKind::Theta3, v, tau).dv);

            // S laws
            add("theta(v,-1/tau) = (1/i)(tau/i)^{1/2} e^{pi i tau v^2} theta(tau v,tau)",
                th(ThetaKind::Theta, v, stau).value,
                (1.0 / I) * root * gauss * th(ThetaKind::Theta, tau * v, tau).value);
            add("theta1(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} theta2(tau v,tau)",
                th(ThetaKind::Theta1, v, stau).value,
                root * gauss * th(ThetaKind::Theta2, tau * v, tau).value);
            add("theta2(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} theta1(tau v,tau)",
                th(ThetaKind::Theta2, v, stau).value,
                root * gauss * th(ThetaKind::Theta1, tau * v, tau).value);
            add("theta3(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} theta3(tau v,tau)",
                th(ThetaKind::Theta3, v, stau).value,
                root * gauss * th(ThetaKind::Theta3, tau * v, tau).value);

            // Differentiated S laws
            add("theta'(v,-1/tau) = (1/i)(tau/i)^{1/2} e^{pi i tau v^2} (2 pi i tau v theta + tau theta')",
                th(ThetaKind::Theta, v, stau).dv,
                (1.0 / I) * root * gauss *
                    (2.0 * M_PI * I * tau * v * th(ThetaKind::Theta, tau * v, tau).value +
                     tau * th(ThetaKind::Theta, tau * v, tau).dv));
            add("theta1'(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} (2 pi i tau v theta2 + tau theta2')",
                th(ThetaKind::Theta1, v, stau).dv,
                root * gauss *
                    (2.0 * M_PI * I * tau * v * th(ThetaKind::Theta2, tau * v, tau).value +
                     tau * th(ThetaKind::Theta2, tau * v, tau).dv));
            add("theta2'(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} (2 pi i tau v theta1 + tau theta1')",
                th(ThetaKind::Theta2, v, stau).dv,
                root * gauss *
                    (2.0 * M_PI * I * tau * v * th(ThetaKind::Theta1, tau * v, tau).value +
                     tau * th(ThetaKind::Theta1, tau * v, tau).dv));
            add("theta3'(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} (2 pi i tau v theta3 + tau theta3')",
                th(ThetaKind::Theta3, v, stau).dv,
                root * gauss *
                    (2.0 * M_PI * I * tau * v * th(ThetaKind::Theta3, tau * v, tau).value +
                     tau * th(ThetaKind::Theta3, tau * v, tau).dv));
        }

        add("theta'(0,-1/tau) = (1/i)(tau/i)^{1/2} tau theta'(0,tau)", theta_prime0(stau, cfg),
            (1.0 / I) * root * tau * theta_prime0(tau, cfg));
        add("jacobi: theta'(0) = pi theta1 theta2 theta3", theta_prime0(tau, cfg),
            M_PI * theta_eval(ThetaKind::Theta1, 0.0, tau, cfg).value *
                theta_eval(ThetaKind::Theta2, 0.0, tau, cfg).value *
                theta_eval(ThetaKind::Theta3, 0.0, tau, cfg).value);
        add("delta2(-1/tau) = tau^2 delta1(tau)", delta_eval(2, stau, cfg),
            tau * tau * delta_eval(1, tau, cfg));
        add("eps2(-1/tau) = tau^4 eps1(tau)", eps_eval(2, stau, cfg),
            tau * tau * tau * tau * eps_eval(1, tau, cfg));
        add("delta2(tau+1) = delta3(tau)", delta_eval(2, tau + 1.0, cfg), delta_eval(3, tau, cfg));
        add("eps2(tau+1) = eps3(tau)", eps_eval(2, tau + 1.0, cfg), eps_eval(3, tau, cfg));

        // Generator-word reduction: ST^2ST tau = -(tau+1)/(2tau+1) and the
        // weight factors of the composed laws multiply to (2tau+1)^{2i}.
        {
            Cplx t_tau = tau + 1.0;
            Cplx st_tau = -1.0 / t_tau;
            Cplx t2st_tau = st_tau + 2.0;
            Cplx word = -1.0 / t2st_tau;
            add("ST^2ST tau = -(tau+1)/(2tau+1)", word, -(tau + 1.0) / (2.0 * tau + 1.0));
            add("(2 T^2ST tau)(T tau / 2) = (2tau+1)^2", (2.0 * t2st_tau) * (t_tau / 2.0),
                (2.0 * tau + 1.0) * (2.0 * tau + 1.0));
        }
    }
    return out;
}

double form_slaw_residual(const FormSeries& lhs, Cplx tau_l, const FormSeries& rhs, Cplx tau_r,
                          Cplx factor, int deg)
{
    double worst = 0.0;
    FormSeries l = lhs.component(deg);
    FormSeries r = rhs.component(deg);
    auto keys = l.canonical_terms();
    for (const auto& [key, q] : r.canonical_terms()) {
        bool found = false;
        for (auto& kv : keys)
            if (kv.first == key)
                found = true;
        if (!found)
            keys.emplace_back(key, QSeries());
    }
    for (const auto& [key, unused] : keys) {
        Cplx lv = 0.0, rv = 0.0;
        auto it = l.terms().find(key);
        if (it != l.terms().end())
            lv = eval_qseries(it->second, tau_l);
        auto jt = r.terms().find(key);
        if (jt != r.terms().end())
            rv = eval_qseries(jt->second, tau_r);
        double resid = std::abs(lv - factor * rv) / std::max(1.0, std::abs(factor * rv));
        worst = std::max(worst, resid);
    }
    return worst;
}

} // namespace cscalc
