#include "qrisk/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qrisk {
namespace calibrate {
namespace {

// Raw premium formula on unvalidated doubles. The public entry points go
// through the validated types; this form exists so the bisection and the
// finite-difference probes can step slightly outside the admissible box
// (e.g. rho = 1 + h) where the formula is still well defined.
double premium_raw(double rho, double mu, double mu_g, double infl, double istar) {
    return (1.0 + istar) / rho *
           ((1.0 + rho * mu + (1.0 - rho) * mu_g) / (1.0 + infl) - rho);
}

double relative_gap(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return 0.0;
    return std::fabs(a - b) / scale;
}

}  // namespace

Yield risk_premium_full(const QuantumRiskParams& params) {
    return Yield(premium_raw(params.rho.value(), params.path.baseline_growth,
                             params.path.grover_growth, params.path.expected_fiat_inflation,
                             params.foreign_ytm.rate()));
}

SurvivalProbability implied_survival_idiosyncratic(Yield risky_ytm, Yield riskfree_ytm) {
    if (risky_ytm.rate() < riskfree_ytm.rate()) {
        throw ValidationError(
            "risky yield below the risk-free yield: quotes admit no survival probability <= 1");
    }
    return SurvivalProbability((1.0 + riskfree_ytm.rate()) / (1.0 + risky_ytm.rate()));
}

SurvivalProbability implied_survival_full(Yield observed_premium, const IssuancePath& path,
                                          Yield foreign_ytm) {
    const double mu = path.baseline_growth;
    const double mu_g = path.grover_growth;
    const double infl = path.expected_fiat_inflation;
    const double istar = foreign_ytm.rate();
    const double target = observed_premium.rate();

    double lo = 1e-9;
    double hi = 1.0;

    // The premium decreases strictly in rho, so f(lo) >= f(hi) always.
    const double f_hi = premium_raw(hi, mu, mu_g, infl, istar) - target;
    if (f_hi == 0.0) return SurvivalProbability(1.0);
    if (f_hi > 0.0) {
        throw NoSolutionError(
            "observed premium is below the minimum the model can produce (the rho = 1 premium); "
            "no survival probability <= 1 reproduces it");
    }
    if (premium_raw(lo, mu, mu_g, infl, istar) - target < 0.0) {
        throw NoSolutionError(
            "observed premium exceeds what even near-certain failure produces; no survival "
            "probability in (0, 1] reproduces it");
    }

    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (premium_raw(mid, mu, mu_g, infl, istar) >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return SurvivalProbability(0.5 * (lo + hi));
}

StaticsReport comparative_statics(const QuantumRiskParams& params) {
    const double rho = params.rho.value();
    const double mu = params.path.baseline_growth;
    const double mu_g = params.path.grover_growth;
    const double infl = params.path.expected_fiat_inflation;
    const double istar = params.foreign_ytm.rate();

    const double h = 1e-6;
    const auto central = [h](double up, double down) { return (up - down) / (2.0 * h); };

    StaticsReport report;

    report.d_premium_d_mu.analytic = (1.0 + istar) / (1.0 + infl);
    report.d_premium_d_mu.finite_difference =
        central(premium_raw(rho, mu + h, mu_g, infl, istar),
                premium_raw(rho, mu - h, mu_g, infl, istar));

    report.d_premium_d_muG.analytic = (1.0 - rho) * (1.0 + istar) / (rho * (1.0 + infl));
    report.d_premium_d_muG.finite_difference =
        central(premium_raw(rho, mu, mu_g + h, infl, istar),
                premium_raw(rho, mu, mu_g - h, infl, istar));

    report.d_premium_d_inflation.analytic =
        -(1.0 + istar) * (1.0 + rho * mu + (1.0 - rho) * mu_g) /
        (rho * (1.0 + infl) * (1.0 + infl));
    report.d_premium_d_inflation.finite_difference =
        central(premium_raw(rho, mu, mu_g, infl + h, istar),
                premium_raw(rho, mu, mu_g, infl - h, istar));

    report.d_premium_d_rho.analytic =
        -(1.0 + istar) * (1.0 + mu_g) / (rho * rho * (1.0 + infl));
    report.d_premium_d_rho.finite_difference =
        central(premium_raw(rho + h, mu, mu_g, infl, istar),
                premium_raw(rho - h, mu, mu_g, infl, istar));

    for (Sensitivity* s : {&report.d_premium_d_mu, &report.d_premium_d_muG,
                           &report.d_premium_d_inflation, &report.d_premium_d_rho}) {
        s->relative_gap = relative_gap(s->analytic, s->finite_difference);
    }
    return report;
}

}  // namespace calibrate
}  // namespace qrisk
