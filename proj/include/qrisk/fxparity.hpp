#pragma once

#include "qrisk/bondmath.hpp"

namespace qrisk {

enum class FxRegime { fixed_peg, flexible };

// Spot and expected spot for the pair (X*, X), quoted repo-wide as units of
// the at-risk currency X per one unit of the risk-free currency X*.
class FxQuote {
public:
    FxQuote(double spot, double expected_spot, FxRegime regime);

    // Stablecoin case: the peg fixes the expected spot at the current spot.
    static FxQuote pegged(double spot) { return FxQuote(spot, spot, FxRegime::fixed_peg); }

    double spot() const { return spot_; }
    double expected_spot() const { return expected_spot_; }
    FxRegime regime() const { return regime_; }

    // (Se - S) / S, the expected percentage move over the period.
    double expected_change() const { return (expected_spot_ - spot_) / spot_; }

private:
    double spot_;
    double expected_spot_;
    FxRegime regime_;
};

// Expected percentage change of the spot rate over one period.
class SpotChange {
public:
    explicit SpotChange(double rate);
    double rate() const { return rate_; }
    bool operator==(const SpotChange&) const = default;

private:
    double rate_;
};

namespace fxparity {

// Uncovered interest parity: the yield a risk-free bond denominated in X
// must pay so holders are indifferent to the foreign bond,
// Se (1 + i*) / S - 1.
Yield uip_domestic_yield(const FxQuote& fx, Yield foreign_ytm);

// Yield on the at-risk crypto-bond once total-loss failure is priced in:
// Se (1 + i*) / (rho S) - 1.
Yield risky_yield_fx(const FxQuote& fx, Yield foreign_ytm, SurvivalProbability rho);

// Expected spot change consistent with holding both bonds in equilibrium:
// rho (1 + i_hat) / (1 + i*) - 1. Feeding risky_yield_fx output back through
// this recovers the quote's expected change.
SpotChange equilibrium_spot_change(Yield risky_ytm, Yield foreign_ytm, SurvivalProbability rho);

// Premium of the risky crypto-bond over the foreign risk-free bond:
// (1 + i*)(1 + sdot - rho) / rho. Equals risky_yield_fx - foreign_ytm.
Yield risk_premium_fx(Yield foreign_ytm, SpotChange spot_change, SurvivalProbability rho);

}  // namespace fxparity
}  // namespace qrisk
