#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "relgraph/util.hpp"

namespace relgraph {

/// Seconds since the Unix epoch, UTC. Date-only inputs parse as midnight.
using Timestamp = std::int64_t;
using OptTime = std::optional<Timestamp>;

/// One table cell. Keys and categorical/text values are strings, timestamps
/// are epoch seconds, numerics are doubles. monostate = null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

inline bool is_null(const Cell& c) { return std::holds_alternative<std::monostate>(c); }

// days-from-civil (Hinnant): exact for all proleptic-Gregorian dates.
inline std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

/// Parse a timestamp cell: raw epoch seconds, "YYYY-MM-DD", or
/// "YYYY-MM-DD[ T]HH:MM:SS". Returns false on malformed input.
inline bool parse_timestamp(std::string_view s, Timestamp& out) {
    if (s.empty()) return false;
    std::int64_t raw;
    if (parse_i64(s, raw)) {
        out = raw;
        return true;
    }
    auto digits = [&](std::size_t pos, std::size_t n, long& v) {
        v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (pos + i >= s.size() || s[pos + i] < '0' || s[pos + i] > '9') return false;
            v = v * 10 + (s[pos + i] - '0');
        }
        return true;
    };
    long y, mo, d;
    if (s.size() < 10 || !digits(0, 4, y) || s[4] != '-' || !digits(5, 2, mo) ||
        s[7] != '-' || !digits(8, 2, d))
        return false;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return false;
    long hh = 0, mm = 0, ss = 0;
    if (s.size() > 10) {
        if (s.size() != 19 || (s[10] != ' ' && s[10] != 'T')) return false;
        if (!digits(11, 2, hh) || s[13] != ':' || !digits(14, 2, mm) || s[16] != ':' ||
            !digits(17, 2, ss))
            return false;
        if (hh > 23 || mm > 59 || ss > 60) return false;
    }
    out = days_from_civil(static_cast<int>(y), static_cast<unsigned>(mo),
                          static_cast<unsigned>(d)) * 86400 +
          hh * 3600 + mm * 60 + ss;
    return true;
}

/// Canonical cell text: null -> empty, doubles -> shortest round-trip.
inline std::string cell_to_string(const Cell& c) {
    if (is_null(c)) return {};
    if (const auto* i = std::get_if<std::int64_t>(&c)) return format_i64(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

}  // namespace relgraph
