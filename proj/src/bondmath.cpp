#include "qrisk/bondmath.hpp"

#include <cmath>
#include <utility>

namespace qrisk {

namespace {

std::string describe(const char* name, double value) {
    return std::string(name) + " = " + std::to_string(value);
}

}  // namespace

SurvivalProbability::SurvivalProbability(double rho) : rho_(rho) {
    if (!(rho > 0.0 && rho <= 1.0)) {
        throw ValidationError("survival probability must lie in (0, 1], got " +
                              describe("rho", rho));
    }
}

Yield::Yield(double rate) : rate_(rate) {
    if (!(rate > -1.0)) {
        throw ValidationError("yield must exceed -100%, got " + describe("rate", rate));
    }
    if (std::isinf(rate)) {
        throw ValidationError("yield must be finite");
    }
}

ZeroCouponBond::ZeroCouponBond(double face, std::string ccy)
    : face_value(face), currency(std::move(ccy)) {
    if (!(face_value > 0.0) || std::isinf(face_value)) {
        throw ValidationError("bond face value must be positive and finite, got " +
                              describe("face_value", face_value));
    }
    if (currency.empty()) {
        throw ValidationError("bond currency tag must not be empty");
    }
}

namespace bondmath {

double price_riskfree(const ZeroCouponBond& bond, Yield ytm) {
    return bond.face_value / (1.0 + ytm.rate());
}

Yield risky_yield(Yield riskfree_ytm, SurvivalProbability rho) {
    return Yield((1.0 + riskfree_ytm.rate()) / rho.value() - 1.0);
}

double price_risky(const ZeroCouponBond& bond, Yield riskfree_ytm, SurvivalProbability rho) {
    return bond.face_value / (1.0 + risky_yield(riskfree_ytm, rho).rate());
}

Yield risk_premium_idiosyncratic(Yield riskfree_ytm, SurvivalProbability rho) {
    const double i = riskfree_ytm.rate();
    const double p = rho.value();
    return Yield((1.0 + i) * (1.0 - p) / p);
}

}  // namespace bondmath
}  // namespace qrisk
