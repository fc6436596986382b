#include "qrisk/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace qrisk {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, const std::string& path,
                       const std::string& msg) {
    throw ValidationError(source + ": " + path + ": " + msg);
}

// Re-raise invariant violations from type constructors with the field path
// attached, so "rho must lie in (0, 1]" arrives as "risk.rho: ...".
template <typename F>
auto at_path(const std::string& source, const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ValidationError& e) {
        fail(source, path, e.what());
    }
}

void check_object(const json& node, const std::string& source, const std::string& path) {
    if (!node.is_object()) fail(source, path, "expected an object");
}

void check_keys(const json& obj, const std::string& source, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(source, path.empty() ? item.key() : path + "." + item.key(),
                 "unknown field");
        }
    }
}

double get_number(const json& obj, const std::string& source, const std::string& path,
                  const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(source, path + "." + key, "expected a number");
    return v.get<double>();
}

std::string get_string(const json& obj, const std::string& source, const std::string& path,
                       const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(source, path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::int64_t get_int(const json& obj, const std::string& source, const std::string& path,
                     const char* key, std::int64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(source, path + "." + key, "expected an integer");
    return v.get<std::int64_t>();
}

}  // namespace

Scenario parse_scenario_json(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(source + ": " + e.what());
    }
    check_object(root, source, "(root)");
    check_keys(root, source, "",
               {"name", "seed", "risk", "ledger", "chain", "miners", "profiles", "horizon",
                "dormant_fraction", "output"});

    Scenario s;
    s.name = get_string(root, source, "", "name", s.name);

    if (root.contains("seed")) {
        const json& v = root.at("seed");
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                       v.get<std::int64_t>() < 0)) {
            fail(source, "seed", "expected a nonnegative integer");
        }
        s.seed = v.get<std::uint64_t>();
    }

    if (root.contains("risk")) {
        const json& risk = root.at("risk");
        check_object(risk, source, "risk");
        check_keys(risk, source, "risk",
                   {"rho", "baseline_growth", "grover_growth", "expected_fiat_inflation",
                    "expected_volume_growth", "foreign_ytm"});
        const double rho = get_number(risk, source, "risk", "rho", 1.0);
        const double mu = get_number(risk, source, "risk", "baseline_growth", 0.0);
        // An absent attack path defaults to "attack adds nothing".
        const double mu_g = get_number(risk, source, "risk", "grover_growth", mu);
        const double infl = get_number(risk, source, "risk", "expected_fiat_inflation", 0.0);
        const double vol = get_number(risk, source, "risk", "expected_volume_growth", 0.0);
        const double istar = get_number(risk, source, "risk", "foreign_ytm", 0.0);

        s.rho = at_path(source, "risk.rho", [&] { return SurvivalProbability(rho); });
        s.path = at_path(source, "risk", [&] { return IssuancePath(mu, mu_g, infl, vol); });
        s.foreign_ytm = at_path(source, "risk.foreign_ytm", [&] { return Yield(istar); });
    }

    if (root.contains("ledger")) {
        const json& ledger = root.at("ledger");
        check_object(ledger, source, "ledger");
        check_keys(ledger, source, "ledger",
                   {"money_supply", "velocity", "transaction_volume", "fiat_price_level",
                    "period"});
        const double m = get_number(ledger, source, "ledger", "money_supply", 1.0);
        const double v = get_number(ledger, source, "ledger", "velocity", 1.0);
        const double t = get_number(ledger, source, "ledger", "transaction_volume", 1.0);
        const double c = get_number(ledger, source, "ledger", "fiat_price_level", 1.0);
        const auto period =
            static_cast<int>(get_int(ledger, source, "ledger", "period", 0));
        s.ledger = at_path(source, "ledger", [&] {
            return LedgerAggregates(m, v, t, c, period);
        });
    }

    if (root.contains("chain")) {
        const json& chain = root.at("chain");
        check_object(chain, source, "chain");
        check_keys(chain, source, "chain",
                   {"initial_difficulty", "target_interval", "retarget_window", "initial_reward",
                    "halving_interval", "supply_cap", "retarget_clamp"});
        ChainParams p;
        p.initial_difficulty =
            get_number(chain, source, "chain", "initial_difficulty", p.initial_difficulty);
        p.target_interval =
            get_number(chain, source, "chain", "target_interval", p.target_interval);
        p.retarget_window = static_cast<int>(
            get_int(chain, source, "chain", "retarget_window", p.retarget_window));
        p.initial_reward =
            get_number(chain, source, "chain", "initial_reward", p.initial_reward);
        p.halving_interval =
            get_int(chain, source, "chain", "halving_interval", p.halving_interval);
        p.supply_cap = get_number(chain, source, "chain", "supply_cap", p.supply_cap);
        p.retarget_clamp =
            get_number(chain, source, "chain", "retarget_clamp", p.retarget_clamp);
        at_path(source, "chain", [&] {
            p.validate();
            return 0;
        });
        s.chain = p;
    }

    if (root.contains("miners")) {
        const json& miners = root.at("miners");
        if (!miners.is_array()) fail(source, "miners", "expected an array");
        if (miners.empty()) {
            fail(source, "miners",
                 "must contain at least one miner (omit the field entirely for the default "
                 "classical miner)");
        }
        for (std::size_t i = 0; i < miners.size(); ++i) {
            const std::string path = "miners[" + std::to_string(i) + "]";
            const json& m = miners.at(i);
            check_object(m, source, path);
            check_keys(m, source, path, {"id", "kind", "rate", "grover_constant"});

            MinerSpec spec;
            spec.id = get_string(m, source, path, "id", "");
            const std::string kind = get_string(m, source, path, "kind", "classical");
            if (kind == "classical") {
                spec.kind = MinerKind::classical;
            } else if (kind == "quantum") {
                spec.kind = MinerKind::quantum;
            } else {
                fail(source, path + ".kind", "expected \"classical\" or \"quantum\", got \"" +
                                                 kind + "\"");
            }
            spec.rate = get_number(m, source, path, "rate", spec.rate);
            spec.grover_constant =
                get_number(m, source, path, "grover_constant", spec.grover_constant);
            at_path(source, path, [&] {
                spec.validate();
                return 0;
            });
            s.miners.push_back(std::move(spec));
        }
    } else {
        s.miners.push_back(default_miner(s.chain));
    }

    if (root.contains("profiles")) {
        const json& profiles = root.at("profiles");
        if (!profiles.is_array()) fail(source, "profiles", "expected an array");
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            const std::string path = "profiles[" + std::to_string(i) + "]";
            const json& p = profiles.at(i);
            check_object(p, source, path);
            check_keys(p, source, path,
                       {"id", "attack_success_prob", "attacker_value", "survival_prob",
                        "capitalization", "loss_fraction"});
            const std::string id = get_string(p, source, path, "id", "");
            const double sigma = get_number(p, source, path, "attack_success_prob", 0.0);
            const double value = get_number(p, source, path, "attacker_value", 1.0);
            const double rho_i = get_number(p, source, path, "survival_prob", 1.0);
            const double cap = get_number(p, source, path, "capitalization", 1.0);
            const double loss = get_number(p, source, path, "loss_fraction", 1.0);
            s.profiles.push_back(at_path(source, path, [&] {
                return ChainProfile(id, sigma, value, SurvivalProbability(rho_i), cap, loss);
            }));
        }
    }

    s.horizon = get_number(root, source, "", "horizon", s.horizon);
    if (!(s.horizon > 0.0)) fail(source, "horizon", "must be positive");

    s.dormant_fraction = get_number(root, source, "", "dormant_fraction", s.dormant_fraction);
    if (!(s.dormant_fraction >= 0.0 && s.dormant_fraction < 1.0)) {
        fail(source, "dormant_fraction", "must lie in [0, 1)");
    }

    if (root.contains("output")) {
        const json& output = root.at("output");
        check_object(output, source, "output");
        check_keys(output, source, "output", {"block_log", "report"});
        s.output.block_log = get_string(output, source, "output", "block_log", "");
        s.output.report = get_string(output, source, "output", "report", "");
    }

    return s;
}

MinerSpec default_miner(const ChainParams& chain) {
    return MinerSpec{"classical-0", MinerKind::classical,
                     chain.initial_difficulty / chain.target_interval, kDefaultGroverConstant};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_json(buffer.str(), path);
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json root;
    root["name"] = s.name;
    root["seed"] = s.seed;

    root["risk"] = {
        {"rho", s.rho.value()},
        {"baseline_growth", s.path.baseline_growth},
        {"grover_growth", s.path.grover_growth},
        {"expected_fiat_inflation", s.path.expected_fiat_inflation},
        {"expected_volume_growth", s.path.expected_volume_growth},
        {"foreign_ytm", s.foreign_ytm.rate()},
    };
    root["ledger"] = {
        {"money_supply", s.ledger.money_supply},
        {"velocity", s.ledger.velocity},
        {"transaction_volume", s.ledger.transaction_volume},
        {"fiat_price_level", s.ledger.fiat_price_level},
        {"period", s.ledger.period},
    };
    root["chain"] = {
        {"initial_difficulty", s.chain.initial_difficulty},
        {"target_interval", s.chain.target_interval},
        {"retarget_window", s.chain.retarget_window},
        {"initial_reward", s.chain.initial_reward},
        {"halving_interval", s.chain.halving_interval},
        {"supply_cap", s.chain.supply_cap},
        {"retarget_clamp", s.chain.retarget_clamp},
    };

    root["miners"] = ordered_json::array();
    for (const MinerSpec& m : s.miners) {
        root["miners"].push_back({
            {"id", m.id},
            {"kind", m.kind == MinerKind::classical ? "classical" : "quantum"},
            {"rate", m.rate},
            {"grover_constant", m.grover_constant},
        });
    }

    root["profiles"] = ordered_json::array();
    for (const ChainProfile& p : s.profiles) {
        root["profiles"].push_back({
            {"id", p.id},
            {"attack_success_prob", p.attack_success_prob},
            {"attacker_value", p.attacker_value},
            {"survival_prob", p.survival_prob.value()},
            {"capitalization", p.capitalization},
            {"loss_fraction", p.loss_fraction},
        });
    }

    root["horizon"] = s.horizon;
    root["dormant_fraction"] = s.dormant_fraction;
    root["output"] = {
        {"block_log", s.output.block_log},
        {"report", s.output.report},
    };

    return root.dump(2) + "\n";
}

}  // namespace qrisk
