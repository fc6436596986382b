#include "qrisk/monetary.hpp"

#include <cmath>
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

LedgerAggregates::LedgerAggregates(double money_supply_in, double velocity_in,
                                   double transaction_volume_in, double fiat_price_level_in,
                                   int period_in)
    : money_supply(money_supply_in),
      velocity(velocity_in),
      transaction_volume(transaction_volume_in),
      fiat_price_level(fiat_price_level_in),
      period(period_in) {
    require_positive(money_supply, "money_supply");
    require_positive(velocity, "velocity");
    require_positive(transaction_volume, "transaction_volume");
    require_positive(fiat_price_level, "fiat_price_level");
}

IssuancePath::IssuancePath(double baseline_growth_in, double grover_growth_in,
                           double expected_fiat_inflation_in, double expected_volume_growth_in)
    : baseline_growth(baseline_growth_in),
      grover_growth(grover_growth_in),
      expected_fiat_inflation(expected_fiat_inflation_in),
      expected_volume_growth(expected_volume_growth_in) {
    if (!(baseline_growth >= 0.0) || std::isinf(baseline_growth)) {
        throw ValidationError("baseline_growth must be >= 0, got " +
                              std::to_string(baseline_growth));
    }
    if (!(grover_growth >= baseline_growth) || std::isinf(grover_growth)) {
        throw ValidationError("grover_growth must be >= baseline_growth; an attack cannot slow "
                              "issuance (got " + std::to_string(grover_growth) + " < " +
                              std::to_string(baseline_growth) + ")");
    }
    if (!(expected_fiat_inflation > -1.0) || std::isinf(expected_fiat_inflation)) {
        throw ValidationError("expected_fiat_inflation must exceed -100%, got " +
                              std::to_string(expected_fiat_inflation));
    }
    if (!(expected_volume_growth > -1.0) || std::isinf(expected_volume_growth)) {
        throw ValidationError("expected_volume_growth must exceed -100%, got " +
                              std::to_string(expected_volume_growth));
    }
}

namespace monetary {

double ppp_price_level(double fiat_level, double spot) {
    require_positive(fiat_level, "fiat_level");
    require_positive(spot, "spot");
    return fiat_level * spot;
}

double quantity_spot_rate(const LedgerAggregates& agg) {
    return agg.money_supply * agg.velocity / (agg.fiat_price_level * agg.transaction_volume);
}

SpotChange expected_spot_change_full(const IssuancePath& path) {
    return SpotChange((1.0 + path.baseline_growth) /
                          ((1.0 + path.expected_fiat_inflation) *
                           (1.0 + path.expected_volume_growth)) -
                      1.0);
}

SpotChange expected_spot_change_approx(const IssuancePath& path) {
    if (path.expected_volume_growth != 0.0) {
        throw ValidationError(
            "the first-order spot change approximation assumes stable transaction volume "
            "(expected_volume_growth == 0)");
    }
    return SpotChange(path.baseline_growth - path.expected_fiat_inflation);
}

PeriodExpectations expectations_from(const LedgerAggregates& prior, const IssuancePath& path) {
    return PeriodExpectations{
        prior.velocity,
        prior.transaction_volume,
        prior.fiat_price_level * (1.0 + path.expected_fiat_inflation),
    };
}

GroverSpotForecast expected_spot_with_grover(const IssuancePath& path, SurvivalProbability rho,
                                             const LedgerAggregates& prior,
                                             const PeriodExpectations& expectations) {
    require_positive(expectations.velocity, "expectations.velocity");
    require_positive(expectations.transaction_volume, "expectations.transaction_volume");
    require_positive(expectations.fiat_price_level, "expectations.fiat_price_level");

    const double p = rho.value();
    const double mixed_growth =
        p * path.baseline_growth + (1.0 - p) * path.grover_growth;

    // Money stock next period is M(1+mu) if the attack does not happen and
    // M(1+muG) if it does; the expectation mixes the two levels.
    const double mixed_stock = prior.money_supply * (1.0 + mixed_growth);
    const double level = expectations.velocity * mixed_stock /
                         (expectations.fiat_price_level * expectations.transaction_volume);

    return GroverSpotForecast{
        level,
        SpotChange((1.0 + mixed_growth) / (1.0 + path.expected_fiat_inflation) - 1.0),
        mixed_growth - path.expected_fiat_inflation,
    };
}

LedgerAggregates apply_supply_shock(const LedgerAggregates& agg, double dormant_fraction) {
    if (!(dormant_fraction >= 0.0 && dormant_fraction < 1.0)) {
        throw ValidationError("dormant_fraction must lie in [0, 1), got " +
                              std::to_string(dormant_fraction));
    }
    LedgerAggregates out = agg;
    out.money_supply = agg.money_supply / (1.0 - dormant_fraction);
    return out;
}

}  // namespace monetary
}  // namespace qrisk
