#include "qrisk/fxparity.hpp"

#include <cmath>
#include <string>

namespace qrisk {

FxQuote::FxQuote(double spot, double expected_spot, FxRegime regime)
    : spot_(spot), expected_spot_(expected_spot), regime_(regime) {
    if (!(spot_ > 0.0) || std::isinf(spot_)) {
        throw ValidationError("fx spot must be positive and finite, got spot = " +
                              std::to_string(spot_));
    }
    if (!(expected_spot_ > 0.0) || std::isinf(expected_spot_)) {
        throw ValidationError("fx expected spot must be positive and finite, got expected_spot = " +
                              std::to_string(expected_spot_));
    }
    if (regime_ == FxRegime::fixed_peg && expected_spot_ != spot_) {
        throw ValidationError("a fixed peg requires expected_spot == spot");
    }
}

SpotChange::SpotChange(double rate) : rate_(rate) {
    if (!(rate > -1.0) || std::isinf(rate)) {
        throw ValidationError("spot change must be a finite rate above -100%, got " +
                              std::to_string(rate));
    }
}

namespace fxparity {

Yield uip_domestic_yield(const FxQuote& fx, Yield foreign_ytm) {
    return Yield(fx.expected_spot() * (1.0 + foreign_ytm.rate()) / fx.spot() - 1.0);
}

Yield risky_yield_fx(const FxQuote& fx, Yield foreign_ytm, SurvivalProbability rho) {
    return Yield(fx.expected_spot() * (1.0 + foreign_ytm.rate()) / (rho.value() * fx.spot()) -
                 1.0);
}

SpotChange equilibrium_spot_change(Yield risky_ytm, Yield foreign_ytm, SurvivalProbability rho) {
    return SpotChange(rho.value() * (1.0 + risky_ytm.rate()) / (1.0 + foreign_ytm.rate()) - 1.0);
}

Yield risk_premium_fx(Yield foreign_ytm, SpotChange spot_change, SurvivalProbability rho) {
    const double istar = foreign_ytm.rate();
    const double sdot = spot_change.rate();
    const double p = rho.value();
    return Yield((1.0 + istar) * (1.0 + sdot - p) / p);
}

}  // namespace fxparity
}  // namespace qrisk
