#pragma once

#include <string>
#include <vector>

#include "qrisk/calibrate.hpp"

namespace qrisk {

// One at-risk blockchain in the attacker-targeting game.
struct ChainProfile {
    ChainProfile(std::string id, double attack_success_prob, double attacker_value,
                 SurvivalProbability survival_prob, double capitalization, double loss_fraction);

    std::string id;
    double attack_success_prob;  // sigma_i in [0, 1]
    double attacker_value;       // v_i > 0, subjective value of a success to the attacker
    SurvivalProbability survival_prob;  // rho_i, independent of sigma_i by design
    double capitalization;       // > 0
    double loss_fraction;        // L_i in (0, 1], holder value destroyed if the chain fails

    bool operator==(const ChainProfile&) const = default;
};

// Holdings split across the profiled chains; weights live on the simplex.
struct Portfolio {
    std::vector<double> weights;
};

namespace attackgame {

// sigma_i * v_i per chain: the attacker's expected benefit from hitting each.
std::vector<double> attacker_expected_benefits(const std::vector<ChainProfile>& chains);

// Id of the chain maximizing sigma_i * v_i; exact ties go to the earliest
// list entry.
std::string attacker_best_target(const std::vector<ChainProfile>& chains);

// Premium per chain under shared issuance expectations, using each chain's
// own survival probability. Lower rho always means a higher premium.
std::vector<Yield> market_premia(const std::vector<ChainProfile>& chains,
                                 const IssuancePath& shared, Yield foreign_ytm);

struct DiversificationResult {
    Portfolio portfolio;
    double worst_case_loss;
};

// Minimax split against an attacker who destroys fraction L_i of whatever
// the holder keeps in one chain of the attacker's choosing. Weights
// w_i = (1/L_i) / sum_j (1/L_j) equalize the exposure w_i L_i across chains,
// which is exactly what makes the worst case minimal; the game value is
// 1 / sum_j (1/L_j).
DiversificationResult minimax_diversification(const std::vector<ChainProfile>& chains);

}  // namespace attackgame
}  // namespace qrisk
