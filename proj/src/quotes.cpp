#include "qrisk/quotes.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace qrisk {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
    throw ValidationError(source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

bool is_iso_date(const std::string& s) {
    // YYYY-MM-DD with a sane calendar range; no time-of-day component.
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

double parse_ytm(const std::string& text, const std::string& source, std::size_t line) {
    if (text.empty()) fail(source, line, "empty ytm field");
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        fail(source, line, "ytm '" + text + "' is not a number");
    }
    if (!(value > -1.0)) {
        fail(source, line, "ytm must exceed -100%, got " + text);
    }
    return value;
}

}  // namespace

MarketQuotes parse_quotes_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ValidationError(source_name + ": empty file, expected header "
                              "instrument,currency,ytm,date");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "instrument,currency,ytm,date") {
        fail(source_name, line_no, "expected header instrument,currency,ytm,date, got '" +
                                       line + "'");
    }

    MarketQuotes quotes;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 4) {
            fail(source_name, line_no,
                 "expected 4 fields, got " + std::to_string(fields.size()));
        }

        Quote q;
        q.instrument = fields[0];
        q.currency = fields[1];
        q.ytm = parse_ytm(fields[2], source_name, line_no);
        q.date = fields[3];

        if (q.instrument.empty()) fail(source_name, line_no, "empty instrument id");
        if (q.currency.empty()) fail(source_name, line_no, "empty currency");
        if (!is_iso_date(q.date)) {
            fail(source_name, line_no, "date '" + q.date + "' is not ISO-8601 (YYYY-MM-DD)");
        }
        if (!seen.insert(q.instrument).second) {
            fail(source_name, line_no, "duplicate instrument id '" + q.instrument + "'");
        }
        quotes.rows.push_back(std::move(q));
    }
    return quotes;
}

MarketQuotes ingest_quotes(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open quotes file '" + path + "'");
    }
    return parse_quotes_csv(in, path);
}

}  // namespace qrisk
