#include "sqed/csv.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sqed/format.hpp"

namespace sqed::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

}  // namespace

void write_header(std::ostream& os, const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << '\n';
}

void write_row(std::ostream& os, const std::vector<Cell>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            os << ',';
        if (cells[i])
            os << format_double(*cells[i]);
    }
    os << '\n';
}

std::size_t Table::column(const std::string& name) const {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw std::out_of_range("csv: no column '" + name + "'");
    return std::size_t(it - header.begin());
}

Table read(std::istream& is) {
    Table table;
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("csv: missing header");
    table.header = split(line);
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto fields = split(line);
        if (fields.size() != table.header.size())
            throw std::invalid_argument("csv: row has " + std::to_string(fields.size()) + " fields, header has " +
                                        std::to_string(table.header.size()));
        std::vector<Cell> row;
        row.reserve(fields.size());
        for (const auto& f : fields)
            row.push_back(f.empty() ? Cell{} : Cell{parse_double(f)});
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace sqed::csv
