#pragma once

#include <string>
#include <vector>

namespace macrogrid::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns; // column-major, aligned with header

    size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
    int column_index(const std::string& name) const;
};

/// Writes with full double round-trip precision so equal data produces
/// byte-identical files.
void write(const std::string& path, const Table& table);
Table read(const std::string& path);

std::string format_double(double v);

} // namespace macrogrid::csv
