#include "qrisk/attackgame.hpp"

#include <cmath>
#include <utility>

namespace qrisk {

ChainProfile::ChainProfile(std::string id_in, double attack_success_prob_in,
                           double attacker_value_in, SurvivalProbability survival_prob_in,
                           double capitalization_in, double loss_fraction_in)
    : id(std::move(id_in)),
      attack_success_prob(attack_success_prob_in),
      attacker_value(attacker_value_in),
      survival_prob(survival_prob_in),
      capitalization(capitalization_in),
      loss_fraction(loss_fraction_in) {
    if (id.empty()) {
        throw ValidationError("chain profile id must not be empty");
    }
    if (!(attack_success_prob >= 0.0 && attack_success_prob <= 1.0)) {
        throw ValidationError("attack_success_prob must lie in [0, 1], got " +
                              std::to_string(attack_success_prob));
    }
    if (!(attacker_value > 0.0) || std::isinf(attacker_value)) {
        throw ValidationError("attacker_value must be positive and finite, got " +
                              std::to_string(attacker_value));
    }
    if (!(capitalization > 0.0) || std::isinf(capitalization)) {
        throw ValidationError("capitalization must be positive and finite, got " +
                              std::to_string(capitalization));
    }
    if (!(loss_fraction > 0.0 && loss_fraction <= 1.0)) {
        throw ValidationError("loss_fraction must lie in (0, 1], got " +
                              std::to_string(loss_fraction));
    }
}

namespace attackgame {

namespace {

void require_nonempty(const std::vector<ChainProfile>& chains) {
    if (chains.empty()) {
        throw ValidationError("at least one chain profile is required");
    }
}

}  // namespace

std::vector<double> attacker_expected_benefits(const std::vector<ChainProfile>& chains) {
    require_nonempty(chains);
    std::vector<double> benefits;
    benefits.reserve(chains.size());
    for (const ChainProfile& c : chains) {
        benefits.push_back(c.attack_success_prob * c.attacker_value);
    }
    return benefits;
}

std::string attacker_best_target(const std::vector<ChainProfile>& chains) {
    const std::vector<double> benefits = attacker_expected_benefits(chains);
    std::size_t best = 0;
    for (std::size_t i = 1; i < benefits.size(); ++i) {
        if (benefits[i] > benefits[best]) best = i;  // strict: ties keep the earliest
    }
    return chains[best].id;
}

std::vector<Yield> market_premia(const std::vector<ChainProfile>& chains,
                                 const IssuancePath& shared, Yield foreign_ytm) {
    require_nonempty(chains);
    std::vector<Yield> premia;
    premia.reserve(chains.size());
    for (const ChainProfile& c : chains) {
        premia.push_back(calibrate::risk_premium_full(
            QuantumRiskParams{c.survival_prob, shared, foreign_ytm}));
    }
    return premia;
}

DiversificationResult minimax_diversification(const std::vector<ChainProfile>& chains) {
    require_nonempty(chains);

    double inv_sum = 0.0;
    for (const ChainProfile& c : chains) inv_sum += 1.0 / c.loss_fraction;

    Portfolio portfolio;
    portfolio.weights.reserve(chains.size());
    for (const ChainProfile& c : chains) {
        portfolio.weights.push_back(1.0 / (c.loss_fraction * inv_sum));
    }
    return DiversificationResult{std::move(portfolio), 1.0 / inv_sum};
}

}  // namespace attackgame
}  // namespace qrisk
