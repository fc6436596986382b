#pragma once

#include <string>

#include "qrisk/errors.hpp"

namespace qrisk {

// Probability that the currency survives the bond's life without a
// catastrophic quantum failure. Zero is rejected: an asset that fails with
// certainty has no finite equilibrium yield.
class SurvivalProbability {
public:
    explicit SurvivalProbability(double rho);
    double value() const { return rho_; }
    double failure_probability() const { return 1.0 - rho_; }
    bool operator==(const SurvivalProbability&) const = default;

private:
    double rho_;
};

// Annualized yield to maturity as a decimal fraction (0.05 means 5%).
// Rates at or below -100% are rejected.
class Yield {
public:
    explicit Yield(double rate);
    double rate() const { return rate_; }
    bool operator==(const Yield&) const = default;

private:
    double rate_;
};

// One-period zero-coupon bond paying `face_value` units of `currency`.
struct ZeroCouponBond {
    ZeroCouponBond(double face_value, std::string currency);
    double face_value;
    std::string currency;
};

namespace bondmath {

// Price of the quantum-risk-free bond: face / (1 + ytm).
double price_riskfree(const ZeroCouponBond& bond, Yield ytm);

// Yield that makes a risk-neutral holder indifferent between the risk-free
// bond and one that pays only with probability rho: (1 + i) / rho - 1.
Yield risky_yield(Yield riskfree_ytm, SurvivalProbability rho);

// Price of the at-risk bond, face / (1 + risky yield). Equals rho times the
// risk-free price.
double price_risky(const ZeroCouponBond& bond, Yield riskfree_ytm, SurvivalProbability rho);

// Spread of the risky yield over the risk-free yield in the same currency:
// (1 + i)(1 - rho) / rho. Zero exactly when rho == 1.
Yield risk_premium_idiosyncratic(Yield riskfree_ytm, SurvivalProbability rho);

}  // namespace bondmath
}  // namespace qrisk
