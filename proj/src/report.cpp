#include "qrisk/report.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

namespace qrisk {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';  // RFC 4180: double any embedded quote
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Report::Value Report::Value::of(std::string s) {
    Value v;
    v.kind = Kind::text;
    v.text = std::move(s);
    return v;
}

Report::Value Report::Value::of(double d) {
    Value v;
    v.kind = Kind::number;
    v.number = d;
    return v;
}

Report::Value Report::Value::of(std::int64_t i) {
    Value v;
    v.kind = Kind::integer;
    v.integer = i;
    return v;
}

void Report::add(const std::string& key, const std::string& value) {
    scalars_.emplace_back(key, Value::of(value));
}

void Report::add(const std::string& key, const char* value) {
    scalars_.emplace_back(key, Value::of(std::string(value)));
}

void Report::add(const std::string& key, double value) {
    scalars_.emplace_back(key, Value::of(value));
}

void Report::add(const std::string& key, std::int64_t value) {
    scalars_.emplace_back(key, Value::of(value));
}

Report::Table& Report::add_table(const std::string& name, std::vector<std::string> columns) {
    tables_.push_back(Table{name, std::move(columns), {}});
    return tables_.back();
}

void Report::add_row(Table& table, std::vector<Value> cells) {
    if (cells.size() != table.columns.size()) {
        throw std::logic_error("report table '" + table.name + "' row width mismatch");
    }
    table.rows.push_back(std::move(cells));
}

std::string Report::format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

namespace {

std::string json_value(const Report::Value& v) {
    switch (v.kind) {
        case Report::Value::Kind::text: return "\"" + json_escape(v.text) + "\"";
        case Report::Value::Kind::number: return Report::format_number(v.number);
        case Report::Value::Kind::integer: return std::to_string(v.integer);
    }
    return "null";
}

std::string csv_value(const Report::Value& v) {
    switch (v.kind) {
        case Report::Value::Kind::text: return csv_escape(v.text);
        case Report::Value::Kind::number: return Report::format_number(v.number);
        case Report::Value::Kind::integer: return std::to_string(v.integer);
    }
    return "";
}

}  // namespace

std::string Report::render_json() const {
    std::string out = "{\n";
    bool first = true;
    for (const auto& [key, value] : scalars_) {
        if (!first) out += ",\n";
        first = false;
        out += "  \"" + json_escape(key) + "\": " + json_value(value);
    }
    for (const Table& table : tables_) {
        if (!first) out += ",\n";
        first = false;
        out += "  \"" + json_escape(table.name) + "\": [";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            out += r == 0 ? "\n" : ",\n";
            out += "    {";
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                if (c > 0) out += ", ";
                out += "\"" + json_escape(table.columns[c]) + "\": " +
                       json_value(table.rows[r][c]);
            }
            out += "}";
        }
        out += table.rows.empty() ? "]" : "\n  ]";
    }
    out += "\n}\n";
    return out;
}

std::string Report::render_csv() const {
    std::string out = "key,value\n";
    for (const auto& [key, value] : scalars_) {
        out += csv_escape(key) + "," + csv_value(value) + "\n";
    }
    for (const Table& table : tables_) {
        out += "\ntable," + csv_escape(table.name) + "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c > 0) out += ",";
            out += csv_escape(table.columns[c]);
        }
        out += "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out += ",";
                out += csv_value(row[c]);
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace qrisk
