#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace diverge::csv {

inline constexpr std::string_view provenance_prefix = "# diverge v1 ";

/// Leading provenance comment plus the column header line.
inline void write_header(std::ostream& out, std::string_view command, const std::vector<std::string>& columns) {
    out << provenance_prefix << command << '\n';
    for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
    out << '\n';
}

struct Table {
    std::string command; // from the provenance line, empty if absent
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(std::string_view name) const {
        for (std::size_t k = 0; k < columns.size(); ++k) {
            if (columns[k] == name) return k;
        }
        throw ParseError("csv: no column named " + std::string(name));
    }

    std::vector<std::uint64_t> integers(std::string_view name) const {
        const std::size_t k = column(name);
        std::vector<std::uint64_t> out;
        out.reserve(rows.size());
        for (const auto& row : rows) {
            const std::string& cell = row[k];
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw ParseError("csv: column " + std::string(name) + " has non-integer cell \"" + cell + "\"");
            out.push_back(v);
        }
        return out;
    }
};

inline std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

/// Reads what write_header and the row writers emit. Comment lines ('#')
/// other than the provenance line are skipped.
inline Table read(std::istream& in) {
    Table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!have_header && line.rfind(provenance_prefix, 0) == 0)
                table.command = line.substr(provenance_prefix.size());
            continue;
        }
        auto cells = split(line);
        if (!have_header) {
            table.columns = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != table.columns.size())
            throw ParseError("csv: row has " + std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(table.columns.size()));
        table.rows.push_back(std::move(cells));
    }
    if (!have_header) throw ParseError("csv: missing header line");
    return table;
}

} // namespace diverge::csv
