#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qrisk/errors.hpp"
#include "qrisk/rng.hpp"

namespace qrisk {

inline constexpr double kSecondsPerYear = 365.0 * 24.0 * 3600.0;

// Query count for one Grover run over a search space with marked density
// 1/D is about (pi/4) * sqrt(D).
inline constexpr double kDefaultGroverConstant = 0.78539816339744830961;

// Proof-of-work environment. Difficulty is the expected number of classical
// hash evaluations per block; no real hashing happens anywhere, a block is
// just a success event in that trial process.
struct ChainParams {
    double initial_difficulty = 1.0e6;
    double target_interval = 600.0;         // seconds per block the retarget aims for
    int retarget_window = 2016;             // blocks between difficulty updates
    double initial_reward = 6.25;           // tokens per block before any halving
    std::int64_t halving_interval = 210000; // blocks between reward halvings
    double supply_cap = 21.0e6;             // issuance stops here
    double retarget_clamp = 4.0;            // bound on the per-retarget change factor

    void validate() const;
    bool operator==(const ChainParams&) const = default;
};

enum class MinerKind { classical, quantum };

// A mining participant. `rate` counts hash evaluations per second for
// classical miners and Grover oracle queries per second for quantum miners.
// Error-correction overhead is modeled by deflating the quantum rate; there
// is no separate overhead knob.
struct MinerSpec {
    std::string id;
    MinerKind kind = MinerKind::classical;
    double rate = 1.0;
    double grover_constant = kDefaultGroverConstant;  // quantum only

    void validate() const;
    bool operator==(const MinerSpec&) const = default;
};

struct BlockRecord {
    std::int64_t height = 0;        // strictly increasing from 0
    double timestamp = 0.0;         // simulated seconds since the run began
    std::string miner;
    double reward = 0.0;            // follows the halving schedule, truncated at the cap
    double difficulty_at_mine = 0.0;

    bool operator==(const BlockRecord&) const = default;
};

struct SimOutcome {
    std::vector<BlockRecord> blocks;
    double realized_issuance_rate = 0.0;  // tokens minted per simulated year
    std::vector<double> window_mean_intervals;  // one entry per completed retarget window
    std::map<std::string, std::int64_t> win_counts;
    double final_difficulty = 0.0;
    double total_minted = 0.0;
    double horizon = 0.0;  // simulated seconds covered
};

namespace chainsim {

// Time for one miner to produce the next block at the given difficulty.
// Classical mining is memoryless: exponential with mean difficulty / rate.
// A quantum miner runs one uninterrupted Grover search per block attempt,
// a deterministic grover_constant * sqrt(difficulty) / rate seconds.
double block_time_sample(const MinerSpec& miner, double difficulty, Rng& rng);

// Single-canonical-chain race: at each height every miner samples a
// completion time and the earliest wins (ties go to the earlier list entry).
// Difficulty retargets every retarget_window blocks by
// (target_interval * window) / (actual window duration), clamped to
// [1/clamp, clamp]; rewards halve every halving_interval blocks and are
// truncated so cumulative issuance never exceeds supply_cap. Blocks with
// timestamps up to and including `horizon` are kept. Deterministic for a
// fixed seed.
SimOutcome simulate_chain(const ChainParams& params, const std::vector<MinerSpec>& miners,
                          double horizon, std::uint64_t seed);

// Empirical issuance acceleration over the first `period` seconds of each
// run: scheduled_mu + minted_attacked / minted_baseline - 1. Equals
// scheduled_mu when the attack changed nothing.
double realized_grover_expansion(const SimOutcome& baseline, const SimOutcome& attacked,
                                 double period, double scheduled_mu);

struct DoubleSpendEstimate {
    double probability = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;  // 0 when the exact shortcut answered
};

// Monte-Carlo probability that an attacker's private chain ever overtakes an
// honest lead of `confirmations` blocks when each next block is the
// attacker's with probability attacker_share. attacker_share = 0 returns 0
// and attacker_share >= 1/2 returns 1 without simulating (the catch-up walk
// is recurrent there).
DoubleSpendEstimate double_spend_success(double attacker_share, int confirmations,
                                         std::int64_t trials, std::uint64_t seed);

// Event-log export, one row per block: height,timestamp,miner,reward,difficulty.
void write_block_log(std::ostream& out, const std::vector<BlockRecord>& blocks);

}  // namespace chainsim
}  // namespace qrisk
