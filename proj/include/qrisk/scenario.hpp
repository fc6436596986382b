#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrisk/attackgame.hpp"
#include "qrisk/chainsim.hpp"

namespace qrisk {

struct OutputPaths {
    std::string block_log;  // empty: no block log written unless --out overrides
    std::string report;     // empty: report goes to stdout only

    bool operator==(const OutputPaths&) const = default;
};

// Everything a reproducible run needs: beliefs, ledger state, chain
// parameters, miners, per-chain attack profiles, and the seed. Default
// member values double as the documented scenario-file defaults.
struct Scenario {
    std::string name = "unnamed";
    std::uint64_t seed = 0;

    SurvivalProbability rho{1.0};
    IssuancePath path{0.0, 0.0, 0.0, 0.0};
    Yield foreign_ytm{0.0};

    LedgerAggregates ledger{1.0, 1.0, 1.0, 1.0, 0};
    ChainParams chain{};
    std::vector<MinerSpec> miners;  // defaulted by the loader if absent
    std::vector<ChainProfile> profiles;

    double horizon = kSecondsPerYear;
    double dormant_fraction = 0.0;
    OutputPaths output{};

    QuantumRiskParams risk_params() const { return QuantumRiskParams{rho, path, foreign_ytm}; }

    bool operator==(const Scenario&) const = default;
};

// The default mining fleet when a scenario names none: one classical rig
// whose rate puts the mean block interval exactly on target at the initial
// difficulty.
MinerSpec default_miner(const ChainParams& chain);

// Strict JSON loader: unknown fields are rejected, every error names the
// offending field path, and all defaults are filled in so the returned
// Scenario serializes with every field explicit.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario_json(const std::string& text, const std::string& source_name);

// Full round-trip form: parse_scenario_json(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

}  // namespace qrisk
