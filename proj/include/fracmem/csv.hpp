#pragma once

#include "fracmem/series.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Plain numeric CSV: optional '#'-prefixed metadata lines, one header line,
// then rows of numbers. Numbers are written with 12 significant digits,
// independent of the global locale.

namespace fracmem::csv {

inline constexpr int significant_digits = 12;

/// Shortest general-format rendering with 12 significant digits ("0.5", "1e-07").
[[nodiscard]] std::string format_number(double v);

struct Table {
    std::vector<std::string> metadata;  ///< metadata lines without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> row_lines;  ///< 1-based source line of each row (filled by read_table)
    std::size_t header_line = 0;
};

/**
 * @brief Parse a numeric table. Every row must have as many fields as the header.
 * @throws ParseError with source:line:column of the first bad field.
 */
[[nodiscard]] Table read_table(std::istream& in, std::string_view source);

/// Write metadata, header and rows.
void write_table(std::ostream& out, const Table& table);

/**
 * @brief Read a `t,value` series. The step is taken from the first two time
 *        stamps and must stay uniform (relative tolerance 1e-6).
 * @throws ParseError on malformed input or a non-uniform time axis.
 */
[[nodiscard]] Series read_series(std::istream& in, std::string_view source);

/// Write `t,value` rows preceded by metadata lines.
void write_series(std::ostream& out, const Series& y, std::span<const std::string> metadata = {});

}  // namespace fracmem::csv
