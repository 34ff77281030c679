#include "fracmem/csv.hpp"

#include "fracmem/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

namespace fracmem::csv {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based column of the first character
};

std::vector<Field> split(std::string_view line) {
    std::vector<Field> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
        std::string_view raw = line.substr(begin, end - begin);
        std::size_t lead = 0;
        while (lead < raw.size() && (raw[lead] == ' ' || raw[lead] == '\t')) ++lead;
        fields.push_back({trim(raw), begin + lead + 1});
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
    }
    return fields;
}

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant_digits);
    return std::string(buf, res.ptr);
}

Table read_table(std::istream& in, std::string_view source) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    const std::string src(source);
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty()) continue;
        if (view.front() == '#') {
            table.metadata.emplace_back(trim(view.substr(1)));
            continue;
        }
        const auto fields = split(view);
        if (!have_header) {
            for (const auto& f : fields) {
                if (f.text.empty()) throw ParseError(src, line_no, f.column, "empty header field");
                table.header.emplace_back(f.text);
            }
            table.header_line = line_no;
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ParseError(src, line_no, 1,
                             "expected " + std::to_string(table.header.size()) + " fields, found " +
                                 std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            double v = 0.0;
            const char* first = f.text.data();
            const char* last = first + f.text.size();
            const auto res = std::from_chars(first, last, v);
            if (f.text.empty() || res.ec != std::errc() || res.ptr != last) {
                throw ParseError(src, line_no, f.column, "invalid number '" + std::string(f.text) + "'");
            }
            if (!std::isfinite(v)) throw ParseError(src, line_no, f.column, "non-finite number");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
        table.row_lines.push_back(line_no);
    }
    if (!have_header) throw ParseError(src, line_no + 1, 1, "missing header line");
    return table;
}

void write_table(std::ostream& out, const Table& table) {
    for (const auto& m : table.metadata) out << "# " << m << '\n';
    for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

Series read_series(std::istream& in, std::string_view source) {
    const Table table = read_table(in, source);
    const std::string src(source);
    if (table.header.size() != 2 || table.header[0] != "t" || table.header[1] != "value") {
        throw ParseError(src, table.header_line, 1, "expected header 't,value'");
    }
    if (table.rows.empty()) throw ParseError(src, table.header_line + 1, 1, "series has no rows");

    Series y;
    y.start = table.rows[0][0];
    y.step = table.rows.size() > 1 ? table.rows[1][0] - table.rows[0][0] : 1.0;
    if (!(y.step > 0.0)) throw ParseError(src, table.row_lines[1], 1, "time stamps must increase");
    y.values.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const double expected = y.time(i);
        if (std::abs(table.rows[i][0] - expected) > 1e-6 * std::max(std::abs(expected), y.step)) {
            throw ParseError(src, table.row_lines[i], 1, "time axis is not uniform");
        }
        y.values.push_back(table.rows[i][1]);
    }
    return y;
}

void write_series(std::ostream& out, const Series& y, std::span<const std::string> metadata) {
    Table table;
    table.metadata.assign(metadata.begin(), metadata.end());
    table.header = {"t", "value"};
    table.rows.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) table.rows.push_back({y.time(i), y.values[i]});
    write_table(out, table);
}

}  // namespace fracmem::csv
