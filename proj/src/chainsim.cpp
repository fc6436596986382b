#include "qrisk/chainsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace qrisk {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || std::isinf(value)) {
        throw ValidationError(std::string(name) + " must be positive and finite, got " +
                              std::to_string(value));
    }
}

}  // namespace

void ChainParams::validate() const {
    if (!(initial_difficulty >= 1.0) || std::isinf(initial_difficulty)) {
        throw ValidationError("initial_difficulty must be >= 1 (one expected hash per block is "
                              "the degenerate minimum), got " +
                              std::to_string(initial_difficulty));
    }
    require_positive(target_interval, "target_interval");
    if (retarget_window < 1) {
        throw ValidationError("retarget_window must be a positive block count");
    }
    require_positive(initial_reward, "initial_reward");
    if (halving_interval < 1) {
        throw ValidationError("halving_interval must be a positive block count");
    }
    require_positive(supply_cap, "supply_cap");
    if (!(retarget_clamp >= 1.0) || std::isinf(retarget_clamp)) {
        throw ValidationError("retarget_clamp must be >= 1, got " +
                              std::to_string(retarget_clamp));
    }
}

void MinerSpec::validate() const {
    if (id.empty()) {
        throw ValidationError("miner id must not be empty");
    }
    if (id.find_first_of(",\"\n\r") != std::string::npos) {
        throw ValidationError("miner id '" + id + "' contains CSV-breaking characters");
    }
    require_positive(rate, "miner rate");
    require_positive(grover_constant, "grover_constant");
}

namespace chainsim {

namespace {

// Reward for a block at this height under the halving schedule, before the
// supply-cap truncation. 2^-halvings is exact in binary floating point.
double scheduled_reward(const ChainParams& params, std::int64_t height) {
    const std::int64_t halvings = height / params.halving_interval;
    if (halvings > 1100) return 0.0;  // past double underflow, reward is gone
    return std::ldexp(params.initial_reward, -static_cast<int>(halvings));
}

double sample_unchecked(const MinerSpec& miner, double difficulty, Rng& rng) {
    if (miner.kind == MinerKind::classical) {
        return rng.exponential(difficulty / miner.rate);
    }
    return miner.grover_constant * std::sqrt(difficulty) / miner.rate;
}

}  // namespace

double block_time_sample(const MinerSpec& miner, double difficulty, Rng& rng) {
    miner.validate();
    if (!(difficulty >= 1.0) || std::isinf(difficulty)) {
        throw ValidationError("difficulty must be >= 1 and finite, got " +
                              std::to_string(difficulty));
    }
    return sample_unchecked(miner, difficulty, rng);
}

SimOutcome simulate_chain(const ChainParams& params, const std::vector<MinerSpec>& miners,
                          double horizon, std::uint64_t seed) {
    params.validate();
    if (miners.empty()) {
        throw ValidationError("simulate_chain needs at least one miner");
    }
    for (const MinerSpec& m : miners) m.validate();
    require_positive(horizon, "horizon");

    Rng rng(seed);
    SimOutcome out;
    out.horizon = horizon;
    for (const MinerSpec& m : miners) out.win_counts[m.id] = 0;

    double now = 0.0;
    double difficulty = params.initial_difficulty;
    double window_start = 0.0;
    double minted = 0.0;
    std::int64_t height = 0;

    for (;;) {
        // Every miner races for the next block; earliest completion wins,
        // ties broken by position in the miner list.
        std::size_t winner = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < miners.size(); ++m) {
            const double dt = sample_unchecked(miners[m], difficulty, rng);
            if (dt < best) {
                best = dt;
                winner = m;
            }
        }

        const double mined_at = now + best;
        if (mined_at > horizon) break;
        now = mined_at;

        double reward = scheduled_reward(params, height);
        reward = std::min(reward, params.supply_cap - minted);
        if (reward < 0.0) reward = 0.0;
        minted += reward;

        out.blocks.push_back(BlockRecord{height, now, miners[winner].id, reward, difficulty});
        ++out.win_counts[miners[winner].id];
        ++height;

        if (height % params.retarget_window == 0) {
            const double duration = now - window_start;
            out.window_mean_intervals.push_back(duration / params.retarget_window);

            double factor = params.target_interval * params.retarget_window / duration;
            factor = std::clamp(factor, 1.0 / params.retarget_clamp, params.retarget_clamp);
            difficulty = std::max(1.0, difficulty * factor);
            window_start = now;
        }
    }

    out.final_difficulty = difficulty;
    out.total_minted = minted;
    out.realized_issuance_rate = minted * kSecondsPerYear / horizon;
    return out;
}

double realized_grover_expansion(const SimOutcome& baseline, const SimOutcome& attacked,
                                 double period, double scheduled_mu) {
    require_positive(period, "period");
    if (baseline.horizon < period || attacked.horizon < period) {
        throw ValidationError("both runs must cover at least one full period");
    }

    const auto minted_within = [period](const SimOutcome& run) {
        double total = 0.0;
        for (const BlockRecord& b : run.blocks) {
            if (b.timestamp > period) break;
            total += b.reward;
        }
        return total;
    };

    const double base = minted_within(baseline);
    if (base <= 0.0) {
        throw ValidationError("baseline run minted nothing in the period; issuance acceleration "
                              "is undefined");
    }
    return scheduled_mu + minted_within(attacked) / base - 1.0;
}

DoubleSpendEstimate double_spend_success(double attacker_share, int confirmations,
                                         std::int64_t trials, std::uint64_t seed) {
    if (!(attacker_share >= 0.0 && attacker_share < 1.0)) {
        throw ValidationError("attacker_share must lie in [0, 1), got " +
                              std::to_string(attacker_share));
    }
    if (confirmations < 1) {
        throw ValidationError("confirmations must be >= 1");
    }
    if (trials < 1) {
        throw ValidationError("trials must be >= 1");
    }

    if (attacker_share == 0.0) return DoubleSpendEstimate{0.0, 0.0, 0};
    // At half the power or more the catch-up walk is recurrent: the attacker
    // eventually overtakes with certainty.
    if (attacker_share >= 0.5) return DoubleSpendEstimate{1.0, 0.0, 0};

    // Abandon a trial once the attacker has fallen so far behind that the
    // remaining success probability is below 1e-12; the truncation bias is
    // smaller than the Monte-Carlo noise by many orders of magnitude.
    const double ratio = attacker_share / (1.0 - attacker_share);
    const std::int64_t give_up =
        static_cast<std::int64_t>(std::ceil(-12.0 * std::log(10.0) / std::log(ratio)));

    Rng rng(seed);
    std::int64_t successes = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        std::int64_t deficit = confirmations;  // honest lead; -1 means overtaken
        while (deficit >= 0 && deficit < give_up) {
            deficit += rng.bernoulli(attacker_share) ? -1 : +1;
        }
        if (deficit < 0) ++successes;
    }

    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return DoubleSpendEstimate{p, se, trials};
}

void write_block_log(std::ostream& out, const std::vector<BlockRecord>& blocks) {
    out << "height,timestamp,miner,reward,difficulty\n";
    char buf[160];
    for (const BlockRecord& b : blocks) {
        std::snprintf(buf, sizeof buf, "%lld,%.10g,", static_cast<long long>(b.height),
                      b.timestamp);
        out << buf << b.miner;
        std::snprintf(buf, sizeof buf, ",%.10g,%.10g\n", b.reward, b.difficulty_at_mine);
        out << buf;
    }
}

}  // namespace chainsim
}  // namespace qrisk
