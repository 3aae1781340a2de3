#pragma once

// Row tables with CSV and JSON writers. Doubles are written with 17
// significant digits so values round-trip exactly.

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "kloss3/arith.hpp"
#include "kloss3/experiments.hpp"

namespace kloss3 {

using CellValue = std::variant<i64, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<CellValue>> rows;

    void add(std::vector<CellValue> row) {
        if (row.size() != columns.size()) throw std::logic_error("Table: row width does not match the header");
        rows.push_back(std::move(row));
    }
};

inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
    return buf;
}

/// Short human form such as "1+0i" or "-0.5-0.866025403784439i".
inline std::string format_complex(std::complex<double> z, int digits = 15) {
    char buf[80];
    const double re = z.real() + 0.0, im = z.imag() + 0.0;
    std::snprintf(buf, sizeof buf, "%.*g%c%.*gi", digits, re, std::signbit(im) ? '-' : '+', digits, std::fabs(im));
    return buf;
}

inline std::string to_cell_string(const CellValue& v) {
    struct Visitor {
        std::string operator()(i64 x) const { return std::to_string(x); }
        std::string operator()(double x) const { return format_double(x); }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, v);
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(to_cell_string(row[i]));
        os << '\n';
    }
}

inline nlohmann::json cell_json(const CellValue& v) {
    struct Visitor {
        nlohmann::json operator()(i64 x) const { return x; }
        nlohmann::json operator()(double x) const {
            if (std::isfinite(x)) return x;
            return format_double(x);
        }
        nlohmann::json operator()(const std::string& s) const { return s; }
        nlohmann::json operator()(bool b) const { return b; }
    };
    return std::visit(Visitor{}, v);
}

/// {"metadata": ..., "rows": [{column: value, ...}, ...]}
inline nlohmann::json table_json(const Table& t, nlohmann::json metadata = nlohmann::json::object()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    return {{"metadata", std::move(metadata)}, {"rows", std::move(rows)}};
}

using Params = std::vector<std::pair<std::string, CellValue>>;

/// GrowthSeries rows: the parameter columns followed by scale, re, im, abs, terms.
inline Table series_table(const GrowthSeries& s, const Params& params) {
    Table t;
    for (const auto& [k, v] : params) t.columns.push_back(k);
    for (const char* c : {"scale", "re", "im", "abs", "terms"}) t.columns.emplace_back(c);
    for (const auto& r : s.records) {
        std::vector<CellValue> row;
        for (const auto& [k, v] : params) row.push_back(v);
        row.insert(row.end(), {r.scale, r.value.real(), r.value.imag(), r.abs, r.term_count});
        t.add(std::move(row));
    }
    return t;
}

inline nlohmann::json series_summary(const GrowthSeries& s) {
    return {{"fitted_slope", cell_json(s.fitted_slope)},
            {"fit_window", {s.fit_window.first, s.fit_window.second}},
            {"residual", cell_json(s.residual)}};
}

} // namespace kloss3
