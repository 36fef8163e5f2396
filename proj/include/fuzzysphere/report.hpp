#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fsph {

inline constexpr const char* kReportVersion = "0.1.0";

/// Exact rational, used for half-integer angular momenta so regression diffs
/// never have to disambiguate 0.5 from 1/2.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// j = 1/2, 3/2, ... as an exact fraction.
Fraction half_integer(double j);

using Value = std::variant<std::int64_t, double, bool, std::string, Fraction>;

struct Row {
    std::vector<std::pair<std::string, Value>> cells;  // schema order
    Row& add(std::string key, Value value);
};

/// One serialized run: {meta: {command, n, ell, seed, version}, rows: [...]}.
struct Report {
    std::string command;
    std::string n_label;      // "3", or "4..32" for sweeps
    bool n_is_integer = true; // emit meta.n as a JSON number when true
    double ell = 1.0;
    std::uint64_t seed = 0;
    std::vector<Row> rows;
};

/// %.17g with an ".0" suffix for integral-looking values; deterministic.
std::string format_double(double value);

/// Compact JSON, object keys sorted, floats at 17 significant digits.
/// Byte-identical for identical reports.
std::string to_json(const Report& report);

/// RFC-4180-style CSV; header matches the row keys in schema order.
std::string to_csv(const Report& report);

}  // namespace fsph
