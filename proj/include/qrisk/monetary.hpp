#pragma once

#include "qrisk/fxparity.hpp"

namespace qrisk {

// Quantity-equation state of the crypto ledger for one period:
// C * T = M * V with the fiat price level alongside for PPP conversions.
struct LedgerAggregates {
    LedgerAggregates(double money_supply, double velocity, double transaction_volume,
                     double fiat_price_level, int period = 0);

    double money_supply;        // M_t, tokens in circulation
    double velocity;            // V_t, turnovers per period
    double transaction_volume;  // T_t, goods transacted on chain per period
    double fiat_price_level;    // C*_t, fiat price index
    int period;                 // t, label only

    // C_t = M V / T, derived rather than stored so it can never drift out of
    // sync with the aggregates.
    double crypto_price_level() const {
        return money_supply * velocity / transaction_volume;
    }

    bool operator==(const LedgerAggregates&) const = default;
};

// Expected issuance and macro rates over the bond's one-year period.
// grover_growth is the issuance growth conditional on a quantum mining
// attack; it can only accelerate the schedule, never slow it.
struct IssuancePath {
    IssuancePath(double baseline_growth, double grover_growth, double expected_fiat_inflation,
                 double expected_volume_growth = 0.0);

    double baseline_growth;          // mu >= 0
    double grover_growth;            // muG >= mu
    double expected_fiat_inflation;  // pi*e > -1
    double expected_volume_growth;   // Tdot_e > -1

    bool operator==(const IssuancePath&) const = default;
};

// Period-t expectations used to turn aggregates into an expected spot level.
struct PeriodExpectations {
    double velocity;
    double transaction_volume;
    double fiat_price_level;
};

namespace monetary {

// PPP: crypto price level implied by the fiat level and the spot rate,
// C_t = C*_t * S_t.
double ppp_price_level(double fiat_level, double spot);

// Quantity-equation spot rate S_t = M V / (C* T).
double quantity_spot_rate(const LedgerAggregates& agg);

// Exact expected spot change from issuance, fiat inflation and volume
// growth: (1 + mu) / ((1 + pi*e)(1 + Tdot_e)) - 1.
SpotChange expected_spot_change_full(const IssuancePath& path);

// First-order version mu - pi*e. Only defined for stable transaction volume;
// rejects paths with expected_volume_growth != 0.
SpotChange expected_spot_change_approx(const IssuancePath& path);

// Default constant-velocity expectations: V and T carried over from the
// prior period, fiat level grown by expected inflation.
PeriodExpectations expectations_from(const LedgerAggregates& prior, const IssuancePath& path);

// Expected spot once a quantum mining attack is a possibility. The level
// mixes the two money stocks, Se_t = Ve/(C*e Te) * [rho M_t + (1-rho) MG_t];
// in percentage terms Sdot_e = (1 + rho mu + (1-rho) muG) / (1 + pi*e) - 1,
// approximately rho mu + (1-rho) muG - pi*e.
struct GroverSpotForecast {
    double expected_spot;
    SpotChange change_exact;
    double change_approx;
};

GroverSpotForecast expected_spot_with_grover(const IssuancePath& path, SurvivalProbability rho,
                                             const LedgerAggregates& prior,
                                             const PeriodExpectations& expectations);

// One-time release of dormant coins into circulating supply. A fraction f of
// all coins was previously frozen, so circulating M_t becomes M_t / (1 - f);
// the quantity-equation spot rate rises by the same factor.
LedgerAggregates apply_supply_shock(const LedgerAggregates& agg, double dormant_fraction);

}  // namespace monetary
}  // namespace qrisk
