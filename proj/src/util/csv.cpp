#include "macrogrid/util/csv.hpp"

#include "macrogrid/util/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace macrogrid::csv {

int Table::column_index(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

std::string format_double(double v) {
    char buf[32];
    // shortest representation that round-trips
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    for (size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        out << table.header[i];
    }
    out << '\n';
    const size_t n = table.rows();
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out << ',';
            out << format_double(table.columns[c][r]);
        }
        out << '\n';
    }
    if (!out) throw ConfigError("write failed: " + path);
}

Table read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty csv: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    t.columns.assign(t.header.size(), {});
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t col = 0, pos = 0;
        while (pos <= line.size()) {
            size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            if (col >= t.columns.size())
                throw ConfigError(path + ": too many fields on line " + std::to_string(lineno));
            double v = 0.0;
            auto res = std::from_chars(line.data() + pos, line.data() + comma, v);
            if (res.ec != std::errc())
                throw ConfigError(path + ": bad number on line " + std::to_string(lineno));
            t.columns[col++].push_back(v);
            pos = comma + 1;
            if (comma == line.size()) break;
        }
        if (col != t.columns.size())
            throw ConfigError(path + ": wrong field count on line " + std::to_string(lineno));
    }
    return t;
}

} // namespace macrogrid::csv
