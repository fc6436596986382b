#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrisk {

// Flat key/value report plus optional named tables, rendered as JSON or CSV
// with every number at 10 significant digits. Insertion order is preserved
// so output is stable for golden-file comparison.
class Report {
public:
    struct Value {
        enum class Kind { text, number, integer };
        Kind kind = Kind::text;
        std::string text;
        double number = 0.0;
        std::int64_t integer = 0;

        static Value of(std::string s);
        static Value of(double d);
        static Value of(std::int64_t i);
    };

    struct Table {
        std::string name;
        std::vector<std::string> columns;
        std::vector<std::vector<Value>> rows;
    };

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value);
    void add(const std::string& key, double value);
    void add(const std::string& key, std::int64_t value);

    // Returns the new table; add_row cells must match the column count.
    Table& add_table(const std::string& name, std::vector<std::string> columns);
    void add_row(Table& table, std::vector<Value> cells);

    std::string render_json() const;
    std::string render_csv() const;

    // 10-significant-digit rendering shared by both formats.
    static std::string format_number(double value);

private:
    std::vector<std::pair<std::string, Value>> scalars_;
    std::vector<Table> tables_;
};

}  // namespace qrisk
