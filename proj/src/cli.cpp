#include "qrisk/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrisk/attackgame.hpp"
#include "qrisk/calibrate.hpp"
#include "qrisk/chainsim.hpp"
#include "qrisk/quotes.hpp"
#include "qrisk/report.hpp"
#include "qrisk/scenario.hpp"

namespace qrisk {

namespace {

double fraction_or(const std::optional<std::string>& flag, double fallback) {
    return flag ? parse_fraction(*flag) : fallback;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw ValidationError("failed writing output file '" + path + "'");
    }
}

// Shared state for one invocation.
struct Invocation {
    std::string config_path;
    std::string quotes_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;
    std::string format = "json";

    std::ostream& out;
    std::ostream& err;

    explicit Invocation(std::ostream& o, std::ostream& e) : out(o), err(e) {}

    Scenario scenario() const {
        Scenario s;
        if (!config_path.empty()) s = load_scenario(config_path);
        if (seed_given) s.seed = seed;
        return s;
    }

    // Reports go to --out when given, to stdout otherwise.
    void emit(const Report& report) const {
        const std::string text =
            format == "csv" ? report.render_csv() : report.render_json();
        if (!out_path.empty()) {
            write_text_file(out_path, text);
        } else {
            out << text;
        }
    }
};

// ---------------------------------------------------------------------------
// price: same-currency bond pricing
// ---------------------------------------------------------------------------

struct PriceArgs {
    double face = 100.0;
    std::string currency = "X";
    std::string ytm;
    std::optional<std::string> rho;
};

void run_price(const Invocation& inv, const PriceArgs& args) {
    const Scenario scenario = inv.scenario();
    const ZeroCouponBond bond(args.face, args.currency);
    const Yield riskfree(parse_fraction(args.ytm));
    const SurvivalProbability rho =
        args.rho ? SurvivalProbability(parse_fraction(*args.rho)) : scenario.rho;

    const Yield risky = bondmath::risky_yield(riskfree, rho);

    Report report;
    report.add("face_value", bond.face_value);
    report.add("currency", bond.currency);
    report.add("riskfree_ytm", riskfree.rate());
    report.add("price_riskfree", bondmath::price_riskfree(bond, riskfree));
    report.add("rho", rho.value());
    report.add("risky_ytm", risky.rate());
    report.add("price_risky", bondmath::price_risky(bond, riskfree, rho));
    report.add("risk_premium_idiosyncratic",
               bondmath::risk_premium_idiosyncratic(riskfree, rho).rate());
    inv.emit(report);
}

// ---------------------------------------------------------------------------
// fx: cross-currency pricing via uncovered interest parity
// ---------------------------------------------------------------------------

struct FxArgs {
    double spot = 0.0;
    std::optional<double> expected_spot;
    bool peg = false;
    std::optional<std::string> foreign_ytm;
    std::optional<std::string> rho;
};

void run_fx(const Invocation& inv, const FxArgs& args) {
    const Scenario scenario = inv.scenario();
    if (!args.peg && !args.expected_spot) {
        throw ValidationError("fx needs either --expected-spot or --peg");
    }
    const FxQuote fx = args.peg
                           ? FxQuote::pegged(args.spot)
                           : FxQuote(args.spot, *args.expected_spot, FxRegime::flexible);
    const Yield foreign(fraction_or(args.foreign_ytm, scenario.foreign_ytm.rate()));
    const SurvivalProbability rho =
        args.rho ? SurvivalProbability(parse_fraction(*args.rho)) : scenario.rho;

    const Yield risky = fxparity::risky_yield_fx(fx, foreign, rho);
    const SpotChange sdot(fx.expected_change());

    Report report;
    report.add("spot", fx.spot());
    report.add("expected_spot", fx.expected_spot());
    report.add("regime", fx.regime() == FxRegime::fixed_peg ? "fixed_peg" : "flexible");
    report.add("foreign_ytm", foreign.rate());
    report.add("rho", rho.value());
    report.add("expected_spot_change", sdot.rate());
    report.add("uip_domestic_yield", fxparity::uip_domestic_yield(fx, foreign).rate());
    report.add("risky_ytm", risky.rate());
    report.add("risk_premium_fx", fxparity::risk_premium_fx(foreign, sdot, rho).rate());
    inv.emit(report);
}

// ---------------------------------------------------------------------------
// forecast: issuance-driven expected exchange rate moves
// ---------------------------------------------------------------------------

struct ForecastArgs {
    std::optional<std::string> mu;
    std::optional<std::string> mu_grover;
    std::optional<std::string> inflation;
    std::optional<std::string> volume_growth;
    std::optional<std::string> rho;
};

void run_forecast(const Invocation& inv, const ForecastArgs& args) {
    const Scenario scenario = inv.scenario();
    const double mu = fraction_or(args.mu, scenario.path.baseline_growth);
    const double mu_g = args.mu_grover ? parse_fraction(*args.mu_grover)
                                       : std::max(mu, scenario.path.grover_growth);
    const IssuancePath path(mu, mu_g,
                            fraction_or(args.inflation, scenario.path.expected_fiat_inflation),
                            fraction_or(args.volume_growth,
                                        scenario.path.expected_volume_growth));
    const SurvivalProbability rho =
        args.rho ? SurvivalProbability(parse_fraction(*args.rho)) : scenario.rho;

    Report report;
    report.add("baseline_growth", path.baseline_growth);
    report.add("grover_growth", path.grover_growth);
    report.add("expected_fiat_inflation", path.expected_fiat_inflation);
    report.add("expected_volume_growth", path.expected_volume_growth);
    report.add("rho", rho.value());
    report.add("spot_change_full", monetary::expected_spot_change_full(path).rate());
    if (path.expected_volume_growth == 0.0) {
        report.add("spot_change_approx", monetary::expected_spot_change_approx(path).rate());
    }

    const PeriodExpectations expectations = monetary::expectations_from(scenario.ledger, path);
    const monetary::GroverSpotForecast grover =
        monetary::expected_spot_with_grover(path, rho, scenario.ledger, expectations);
    report.add("grover_change_exact", grover.change_exact.rate());
    report.add("grover_change_approx", grover.change_approx);
    report.add("prior_spot", monetary::quantity_spot_rate(scenario.ledger));
    report.add("expected_spot", grover.expected_spot);
    inv.emit(report);
}

// ---------------------------------------------------------------------------
// premium: full quantum risk premium
// ---------------------------------------------------------------------------

struct ModelArgs {
    std::optional<std::string> rho;
    std::optional<std::string> mu;
    std::optional<std::string> mu_grover;
    std::optional<std::string> inflation;
    std::optional<std::string> foreign_ytm;
};

QuantumRiskParams model_params(const Scenario& scenario, const ModelArgs& args) {
    const double mu = fraction_or(args.mu, scenario.path.baseline_growth);
    const double mu_g = args.mu_grover ? parse_fraction(*args.mu_grover)
                                       : std::max(mu, scenario.path.grover_growth);
    return QuantumRiskParams{
        args.rho ? SurvivalProbability(parse_fraction(*args.rho)) : scenario.rho,
        IssuancePath(mu, mu_g,
                     fraction_or(args.inflation, scenario.path.expected_fiat_inflation),
                     0.0),
        Yield(fraction_or(args.foreign_ytm, scenario.foreign_ytm.rate())),
    };
}

void add_model_echo(Report& report, const QuantumRiskParams& params) {
    report.add("rho", params.rho.value());
    report.add("baseline_growth", params.path.baseline_growth);
    report.add("grover_growth", params.path.grover_growth);
    report.add("expected_fiat_inflation", params.path.expected_fiat_inflation);
    report.add("foreign_ytm", params.foreign_ytm.rate());
}

void run_premium(const Invocation& inv, const ModelArgs& args) {
    const QuantumRiskParams params = model_params(inv.scenario(), args);
    Report report;
    add_model_echo(report, params);
    report.add("risk_premium_full", calibrate::risk_premium_full(params).rate());
    inv.emit(report);
}

// ---------------------------------------------------------------------------
// imply: survival probability from market observables
// ---------------------------------------------------------------------------

struct ImplyArgs {
    std::optional<std::string> risky_ytm;
    std::optional<std::string> riskfree_ytm;
    std::optional<std::string> premium;
    ModelArgs model;
};

void run_imply(const Invocation& inv, const ImplyArgs& args) {
    Report report;

    if (args.premium) {
        // Full-model inversion from an observed premium.
        const Scenario scenario = inv.scenario();
        const double mu = fraction_or(args.model.mu, scenario.path.baseline_growth);
        const double mu_g = args.model.mu_grover
                                ? parse_fraction(*args.model.mu_grover)
                                : std::max(mu, scenario.path.grover_growth);
        const IssuancePath path(
            mu, mu_g, fraction_or(args.model.inflation, scenario.path.expected_fiat_inflation),
            0.0);
        const Yield foreign(
            fraction_or(args.model.foreign_ytm, scenario.foreign_ytm.rate()));
        const Yield observed(parse_fraction(*args.premium));

        const SurvivalProbability rho =
            calibrate::implied_survival_full(observed, path, foreign);
        report.add("observed_premium", observed.rate());
        report.add("baseline_growth", path.baseline_growth);
        report.add("grover_growth", path.grover_growth);
        report.add("expected_fiat_inflation", path.expected_fiat_inflation);
        report.add("foreign_ytm", foreign.rate());
        report.add("rho", rho.value());
        report.add("failure_probability", rho.failure_probability());
        inv.emit(report);
        return;
    }

    if (args.risky_ytm || args.riskfree_ytm) {
        if (!args.risky_ytm || !args.riskfree_ytm) {
            throw ValidationError("imply needs both --risky-ytm and --riskfree-ytm");
        }
        const Yield risky(parse_fraction(*args.risky_ytm));
        const Yield riskfree(parse_fraction(*args.riskfree_ytm));
        const SurvivalProbability rho =
            calibrate::implied_survival_idiosyncratic(risky, riskfree);
        report.add("risky_ytm", risky.rate());
        report.add("riskfree_ytm", riskfree.rate());
        report.add("rho", rho.value());
        report.add("failure_probability", rho.failure_probability());
        inv.emit(report);
        return;
    }

    if (!inv.quotes_path.empty()) {
        const MarketQuotes quotes = ingest_quotes(inv.quotes_path);
        if (quotes.rows.size() < 2) {
            throw ValidationError("implied survival from quotes needs at least two rows "
                                  "(a benchmark and one risky instrument)");
        }
        // The lowest-yield instrument anchors the risk-free side.
        const auto benchmark = std::min_element(
            quotes.rows.begin(), quotes.rows.end(),
            [](const Quote& a, const Quote& b) { return a.ytm < b.ytm; });

        report.add("benchmark_instrument", benchmark->instrument);
        report.add("riskfree_ytm", benchmark->ytm);
        Report::Table& table = report.add_table(
            "implied", {"instrument", "currency", "risky_ytm", "rho", "failure_probability"});
        for (const Quote& q : quotes.rows) {
            if (&q == &*benchmark) continue;
            const SurvivalProbability rho = calibrate::implied_survival_idiosyncratic(
                Yield(q.ytm), Yield(benchmark->ytm));
            report.add_row(table, {Report::Value::of(q.instrument),
                                   Report::Value::of(q.currency), Report::Value::of(q.ytm),
                                   Report::Value::of(rho.value()),
                                   Report::Value::of(rho.failure_probability())});
        }
        inv.emit(report);
        return;
    }

    throw ValidationError(
        "imply needs one input set: --quotes FILE, or --risky-ytm with --riskfree-ytm, or "
        "--premium with model parameters");
}

// ---------------------------------------------------------------------------
// statics: premium sensitivities
// ---------------------------------------------------------------------------

void run_statics(const Invocation& inv, const ModelArgs& args) {
    const QuantumRiskParams params = model_params(inv.scenario(), args);
    const StaticsReport statics = calibrate::comparative_statics(params);

    Report report;
    add_model_echo(report, params);
    Report::Table& table = report.add_table(
        "sensitivities", {"derivative", "analytic", "finite_difference", "relative_gap"});
    const auto row = [&](const char* name, const Sensitivity& s) {
        report.add_row(table,
                       {Report::Value::of(std::string(name)), Report::Value::of(s.analytic),
                        Report::Value::of(s.finite_difference),
                        Report::Value::of(s.relative_gap)});
    };
    row("d_premium_d_mu", statics.d_premium_d_mu);
    row("d_premium_d_muG", statics.d_premium_d_muG);
    row("d_premium_d_inflation", statics.d_premium_d_inflation);
    row("d_premium_d_rho", statics.d_premium_d_rho);
    inv.emit(report);
}

// ---------------------------------------------------------------------------
// simulate: proof-of-work chain run
// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::optional<double> horizon;
};

void run_simulate(const Invocation& inv, const SimulateArgs& args) {
    Scenario scenario = inv.scenario();
    if (scenario.miners.empty()) {
        scenario.miners.push_back(default_miner(scenario.chain));
    }
    const double horizon = args.horizon.value_or(scenario.horizon);

    const SimOutcome outcome =
        chainsim::simulate_chain(scenario.chain, scenario.miners, horizon, scenario.seed);

    // The block log is the primary output: --out wins, then the scenario's
    // own block_log path, else no log file.
    const std::string log_path =
        !inv.out_path.empty() ? inv.out_path : scenario.output.block_log;
    if (!log_path.empty()) {
        std::ofstream log(log_path, std::ios::binary);
        if (!log) {
            throw ValidationError("cannot open block log '" + log_path + "'");
        }
        chainsim::write_block_log(log, outcome.blocks);
    }

    Report report;
    report.add("scenario", scenario.name);
    report.add("seed", static_cast<std::int64_t>(scenario.seed));
    report.add("horizon", horizon);
    report.add("block_count", static_cast<std::int64_t>(outcome.blocks.size()));
    report.add("total_minted", outcome.total_minted);
    report.add("realized_issuance_rate", outcome.realized_issuance_rate);
    report.add("final_difficulty", outcome.final_difficulty);
    if (!log_path.empty()) report.add("block_log", log_path);

    Report::Table& miners = report.add_table("miners", {"miner", "blocks_won"});
    for (const auto& [id, wins] : outcome.win_counts) {
        report.add_row(miners, {Report::Value::of(id), Report::Value::of(wins)});
    }
    Report::Table& windows = report.add_table("windows", {"window", "mean_interval"});
    for (std::size_t w = 0; w < outcome.window_mean_intervals.size(); ++w) {
        report.add_row(windows, {Report::Value::of(static_cast<std::int64_t>(w)),
                                 Report::Value::of(outcome.window_mean_intervals[w])});
    }

    const std::string text =
        inv.format == "csv" ? report.render_csv() : report.render_json();
    inv.out << text;
    if (!scenario.output.report.empty()) {
        write_text_file(scenario.output.report, text);
    }
}

// ---------------------------------------------------------------------------
// doublespend: overtake-probability estimate
// ---------------------------------------------------------------------------

struct DoubleSpendArgs {
    std::string attacker_share;
    int confirmations = 6;
    std::int64_t trials = 100000;
};

void run_doublespend(const Invocation& inv, const DoubleSpendArgs& args) {
    const Scenario scenario = inv.scenario();
    const double share = parse_fraction(args.attacker_share);
    const chainsim::DoubleSpendEstimate estimate = chainsim::double_spend_success(
        share, args.confirmations, args.trials, scenario.seed);

    Report report;
    report.add("attacker_share", share);
    report.add("confirmations", static_cast<std::int64_t>(args.confirmations));
    report.add("method", estimate.trials == 0 ? "exact" : "monte_carlo");
    report.add("trials", estimate.trials);
    report.add("probability", estimate.probability);
    report.add("std_error", estimate.std_error);
    inv.emit(report);
}

// ---------------------------------------------------------------------------
// game: attacker targeting and the diversification response
// ---------------------------------------------------------------------------

void run_game(const Invocation& inv) {
    const Scenario scenario = inv.scenario();
    if (scenario.profiles.empty()) {
        throw ValidationError("game needs chain profiles; add a profiles section to the "
                              "scenario passed via --config");
    }

    const std::vector<double> benefits =
        attackgame::attacker_expected_benefits(scenario.profiles);
    const std::vector<Yield> premia = attackgame::market_premia(
        scenario.profiles, scenario.path, scenario.foreign_ytm);
    const attackgame::DiversificationResult diversified =
        attackgame::minimax_diversification(scenario.profiles);

    Report report;
    report.add("best_target", attackgame::attacker_best_target(scenario.profiles));
    report.add("worst_case_loss", diversified.worst_case_loss);
    Report::Table& chains = report.add_table(
        "chains", {"id", "attack_success_prob", "attacker_value", "expected_benefit",
                   "survival_prob", "loss_fraction", "risk_premium", "weight"});
    for (std::size_t i = 0; i < scenario.profiles.size(); ++i) {
        const ChainProfile& p = scenario.profiles[i];
        report.add_row(chains,
                       {Report::Value::of(p.id), Report::Value::of(p.attack_success_prob),
                        Report::Value::of(p.attacker_value), Report::Value::of(benefits[i]),
                        Report::Value::of(p.survival_prob.value()),
                        Report::Value::of(p.loss_fraction),
                        Report::Value::of(premia[i].rate()),
                        Report::Value::of(diversified.portfolio.weights[i])});
    }
    inv.emit(report);
}

}  // namespace

double parse_fraction(const std::string& text) {
    std::string body = text;
    // Trim outer whitespace only; anything else must be part of the number.
    const auto begin = body.find_first_not_of(" \t");
    const auto end = body.find_last_not_of(" \t");
    if (begin == std::string::npos) {
        throw ValidationError("empty rate value");
    }
    body = body.substr(begin, end - begin + 1);

    double divisor = 1.0;
    if (body.back() == '%') {
        divisor = 100.0;
        body.pop_back();
        if (body.empty()) {
            throw ValidationError("'%' needs a number in front of it");
        }
    }

    char* parse_end = nullptr;
    const double value = std::strtod(body.c_str(), &parse_end);
    if (parse_end != body.c_str() + body.size()) {
        throw ValidationError("'" + text + "' is not a number (use decimal fractions, or a '%' "
                                           "suffix for percentages)");
    }
    return value / divisor;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pricing, calibration and simulation for quantum-failure risk in "
                 "cryptocurrencies"};
    app.name("qrisk");
    app.require_subcommand(1);
    app.fallthrough();

    Invocation inv(out, err);
    app.add_option("--config", inv.config_path, "scenario JSON file");
    app.add_option("--quotes", inv.quotes_path, "market quotes CSV file");
    auto* seed_opt = app.add_option("--seed", inv.seed, "override the scenario seed");
    app.add_option("--out", inv.out_path, "primary output file (block log for simulate, "
                                          "report otherwise; default stdout)");
    app.add_option("--format", inv.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    PriceArgs price;
    auto* price_cmd = app.add_subcommand("price", "Price one-year zero-coupon crypto-bonds "
                                                  "under total-loss risk");
    price_cmd->add_option("--face", price.face, "face value")->capture_default_str();
    price_cmd->add_option("--currency", price.currency, "currency tag")->capture_default_str();
    price_cmd->add_option("--ytm", price.ytm, "risk-free yield to maturity")->required();
    price_cmd->add_option("--rho", price.rho, "survival probability (default: scenario value)");

    FxArgs fx;
    auto* fx_cmd = app.add_subcommand("fx", "Cross-currency bond yields via uncovered "
                                            "interest parity");
    fx_cmd->add_option("--spot", fx.spot, "spot rate, units of X per unit of X*")->required();
    auto* fx_exp = fx_cmd->add_option("--expected-spot", fx.expected_spot,
                                      "expected spot in one period");
    fx_cmd->add_flag("--peg", fx.peg, "stablecoin peg: expected spot equals spot")
        ->excludes(fx_exp);
    fx_cmd->add_option("--foreign-ytm", fx.foreign_ytm, "risk-free yield in X*");
    fx_cmd->add_option("--rho", fx.rho, "survival probability");

    ForecastArgs forecast;
    auto* forecast_cmd = app.add_subcommand("forecast", "Expected exchange-rate moves from "
                                                        "issuance and inflation");
    forecast_cmd->add_option("--mu", forecast.mu, "scheduled issuance growth");
    forecast_cmd->add_option("--mu-grover", forecast.mu_grover,
                             "issuance growth under a quantum mining attack");
    forecast_cmd->add_option("--inflation", forecast.inflation, "expected fiat inflation");
    forecast_cmd->add_option("--volume-growth", forecast.volume_growth,
                             "expected transaction volume growth");
    forecast_cmd->add_option("--rho", forecast.rho, "survival probability");

    ModelArgs premium;
    auto* premium_cmd = app.add_subcommand("premium", "Full quantum risk premium over the "
                                                      "foreign risk-free yield");
    premium_cmd->add_option("--rho", premium.rho, "survival probability");
    premium_cmd->add_option("--mu", premium.mu, "scheduled issuance growth");
    premium_cmd->add_option("--mu-grover", premium.mu_grover, "attack issuance growth");
    premium_cmd->add_option("--inflation", premium.inflation, "expected fiat inflation");
    premium_cmd->add_option("--foreign-ytm", premium.foreign_ytm, "foreign risk-free yield");

    ImplyArgs imply;
    auto* imply_cmd = app.add_subcommand("imply", "Market-implied survival probability");
    imply_cmd->add_option("--risky-ytm", imply.risky_ytm, "observed risky yield");
    imply_cmd->add_option("--riskfree-ytm", imply.riskfree_ytm,
                          "observed same-currency risk-free yield");
    imply_cmd->add_option("--premium", imply.premium, "observed premium over the foreign "
                                                      "risk-free yield (full model)");
    imply_cmd->add_option("--mu", imply.model.mu, "scheduled issuance growth");
    imply_cmd->add_option("--mu-grover", imply.model.mu_grover, "attack issuance growth");
    imply_cmd->add_option("--inflation", imply.model.inflation, "expected fiat inflation");
    imply_cmd->add_option("--foreign-ytm", imply.model.foreign_ytm,
                          "foreign risk-free yield");

    ModelArgs statics;
    auto* statics_cmd = app.add_subcommand("statics", "Premium sensitivities, analytic vs "
                                                      "finite difference");
    statics_cmd->add_option("--rho", statics.rho, "survival probability");
    statics_cmd->add_option("--mu", statics.mu, "scheduled issuance growth");
    statics_cmd->add_option("--mu-grover", statics.mu_grover, "attack issuance growth");
    statics_cmd->add_option("--inflation", statics.inflation, "expected fiat inflation");
    statics_cmd->add_option("--foreign-ytm", statics.foreign_ytm, "foreign risk-free yield");

    SimulateArgs simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run the proof-of-work chain "
                                                        "simulation from a scenario");
    simulate_cmd->add_option("--horizon", simulate.horizon,
                             "simulated seconds (default: scenario horizon)");

    DoubleSpendArgs doublespend;
    auto* doublespend_cmd = app.add_subcommand("doublespend", "Probability a private fork "
                                                              "overtakes z confirmations");
    doublespend_cmd->add_option("--attacker-share", doublespend.attacker_share,
                                "attacker's share of block production")
        ->required();
    doublespend_cmd->add_option("--confirmations", doublespend.confirmations,
                                "honest lead in blocks")
        ->capture_default_str();
    doublespend_cmd->add_option("--trials", doublespend.trials, "Monte-Carlo trials")
        ->capture_default_str();

    auto* game_cmd = app.add_subcommand("game", "Attacker targeting and minimax "
                                                "diversification over chain profiles");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    }

    try {
        inv.seed_given = seed_opt->count() > 0;
        if (price_cmd->parsed()) run_price(inv, price);
        else if (fx_cmd->parsed()) run_fx(inv, fx);
        else if (forecast_cmd->parsed()) run_forecast(inv, forecast);
        else if (premium_cmd->parsed()) run_premium(inv, premium);
        else if (imply_cmd->parsed()) run_imply(inv, imply);
        else if (statics_cmd->parsed()) run_statics(inv, statics);
        else if (simulate_cmd->parsed()) run_simulate(inv, simulate);
        else if (doublespend_cmd->parsed()) run_doublespend(inv, doublespend);
        else if (game_cmd->parsed()) run_game(inv);
    } catch (const NoSolutionError& e) {
        err << "no solution: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qrisk
