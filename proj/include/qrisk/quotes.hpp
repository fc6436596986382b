#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrisk/errors.hpp"

namespace qrisk {

struct Quote {
    std::string instrument;
    std::string currency;
    double ytm = 0.0;   // decimal fraction, > -1
    std::string date;   // ISO-8601 calendar date, YYYY-MM-DD
};

struct MarketQuotes {
    std::vector<Quote> rows;
    // Not part of the CSV; callers attach a fiat inflation forecast when the
    // full-model calibration needs one.
    std::optional<double> expected_fiat_inflation;
};

// Load `instrument,currency,ytm,date` rows. All-or-nothing: the first
// malformed row aborts the load with its line number. Duplicate instrument
// ids are rejected.
MarketQuotes ingest_quotes(const std::string& path);

// Same parser on an already-open stream; `source_name` labels errors.
MarketQuotes parse_quotes_csv(std::istream& in, const std::string& source_name);

}  // namespace qrisk
