#pragma once

#include "qrisk/monetary.hpp"

namespace qrisk {

// Full belief bundle behind the risky crypto-bond premium: survival
// probability, issuance expectations, and the foreign risk-free yield.
struct QuantumRiskParams {
    SurvivalProbability rho;
    IssuancePath path;
    Yield foreign_ytm;
};

// One sensitivity of the premium, analytic next to a central
// finite-difference estimate of the same derivative (step 1e-6).
struct Sensitivity {
    double analytic;
    double finite_difference;
    double relative_gap;  // |analytic - fd| / max(|analytic|, |fd|), 0 when both vanish
};

struct StaticsReport {
    Sensitivity d_premium_d_mu;
    Sensitivity d_premium_d_muG;
    Sensitivity d_premium_d_inflation;
    Sensitivity d_premium_d_rho;
};

namespace calibrate {

// Premium of the at-risk crypto-bond over the foreign risk-free yield when
// both accelerated issuance and total-loss failure are priced in:
//   R = (1 + i*)/rho * [(1 + rho mu + (1 - rho) muG) / (1 + pi*e) - rho].
Yield risk_premium_full(const QuantumRiskParams& params);

// Survival probability implied by two same-currency quotes:
// rho = (1 + i) / (1 + i_hat). Quotes with i_hat < i are arbitrage-inconsistent
// and rejected.
SurvivalProbability implied_survival_idiosyncratic(Yield risky_ytm, Yield riskfree_ytm);

// Survival probability implied by an observed premium under the full model.
// The premium is strictly decreasing in rho, so the root is unique when it
// exists; found by bisection on [1e-9, 1] to absolute tolerance 1e-12.
// Premia outside the attainable range raise NoSolutionError rather than
// clamping: a clamped value would fabricate a market belief.
SurvivalProbability implied_survival_full(Yield observed_premium, const IssuancePath& path,
                                          Yield foreign_ytm);

// All four premium sensitivities (issuance, attack issuance, fiat inflation,
// survival probability), analytic forms next to finite differences.
StaticsReport comparative_statics(const QuantumRiskParams& params);

}  // namespace calibrate
}  // namespace qrisk
