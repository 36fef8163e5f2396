#include "fuzzysphere/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fsph {

Fraction half_integer(double j) {
    const double doubled = 2.0 * j;
    const auto num = static_cast<std::int64_t>(std::llround(doubled));
    if (std::abs(doubled - double(num)) > 1e-9)
        throw std::invalid_argument("half_integer: value is not a half-integer");
    if (num % 2 == 0) return {num / 2, 1};
    return {num, 2};
}

Row& Row::add(std::string key, Value value) {
    cells.emplace_back(std::move(key), std::move(value));
    return *this;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string out(buf);
    if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
    return out;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

std::string json_value(const Value& v) {
    struct Writer {
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return "\"" + escape_json(s) + "\""; }
        std::string operator()(const Fraction& f) const {
            return "{\"den\":" + std::to_string(f.den) + ",\"num\":" + std::to_string(f.num) + "}";
        }
    };
    return std::visit(Writer{}, v);
}

std::string csv_value(const Value& v) {
    struct Writer {
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const Fraction& f) const {
            if (f.den == 1) return std::to_string(f.num);
            return std::to_string(f.num) + "/" + std::to_string(f.den);
        }
    };
    return std::visit(Writer{}, v);
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_json(const Report& report) {
    std::string out = "{\"meta\":{";
    out += "\"command\":\"" + escape_json(report.command) + "\",";
    out += "\"ell\":" + format_double(report.ell) + ",";
    out += report.n_is_integer ? "\"n\":" + report.n_label + "," : "\"n\":\"" + escape_json(report.n_label) + "\",";
    out += "\"seed\":" + std::to_string(report.seed) + ",";
    out += "\"version\":\"" + std::string(kReportVersion) + "\"";
    out += "},\"rows\":[";
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
        if (r) out += ",";
        auto cells = report.rows[r].cells;
        std::sort(cells.begin(), cells.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out += "{";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += ",";
            out += "\"" + escape_json(cells[c].first) + "\":" + json_value(cells[c].second);
        }
        out += "}";
    }
    out += "]}\n";
    return out;
}

std::string to_csv(const Report& report) {
    std::string out;
    if (report.rows.empty()) return out;
    const auto& header = report.rows.front().cells;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) out += ",";
        out += csv_quote(header[c].first);
    }
    out += "\n";
    for (const auto& row : report.rows) {
        if (row.cells.size() != header.size())
            throw std::invalid_argument("to_csv: rows must share one schema");
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            if (c) out += ",";
            if (row.cells[c].first != header[c].first)
                throw std::invalid_argument("to_csv: rows must share one schema");
            out += csv_quote(csv_value(row.cells[c].second));
        }
        out += "\n";
    }
    return out;
}

}  // namespace fsph
