#ifndef SQED_CSV_HPP
#define SQED_CSV_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sqed::csv {

/// A cell; std::nullopt is written as an empty field.
using Cell = std::optional<double>;

void write_header(std::ostream& os, const std::vector<std::string>& columns);
void write_row(std::ostream& os, const std::vector<Cell>& cells);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    /// Column index by header name; throws std::out_of_range when absent.
    std::size_t column(const std::string& name) const;
};

Table read(std::istream& is);

}  // namespace sqed::csv

#endif  // SQED_CSV_HPP
