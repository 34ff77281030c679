#include "fracmem/csv.hpp"
#include "fracmem/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

using namespace fracmem;
using namespace fracmem::csv;

namespace {

std::string parse_error_of(const std::string& text) {
    std::istringstream in(text);
    try {
        (void)read_series(in, "data.csv");
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e-7) == "1e-07");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-2.0 / 3.0) == "-0.666666666667");
    CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
    CHECK(format_number(std::acos(-1.0)) == "3.14159265359");
}

TEST_CASE("table round trip") {
    Table t;
    t.metadata = {"alpha=0.5", "note"};
    t.header = {"a", "b"};
    t.rows = {{1.0, -2.5}, {0.125, 3e10}};
    std::ostringstream out;
    write_table(out, t);
    CHECK(out.str() == "# alpha=0.5\n# note\na,b\n1,-2.5\n0.125,30000000000\n");

    std::istringstream in(out.str());
    const auto back = read_table(in, "mem");
    CHECK(back.metadata == t.metadata);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(back.header_line == 3);
    CHECK(back.row_lines == std::vector<std::size_t>{4, 5});
}

TEST_CASE("series round trip keeps the time axis") {
    Series y({0.1, -0.2, 0.3, 1e-5}, 0.25, 10.0);
    std::ostringstream out;
    write_series(out, y);
    std::istringstream in(out.str());
    const auto back = read_series(in, "mem");
    CHECK(back.values == y.values);
    CHECK(back.step == doctest::Approx(0.25));
    CHECK(back.start == 10.0);

    std::istringstream single("t,value\n3,7\n");
    const auto one = read_series(single, "mem");
    CHECK(one.size() == 1);
    CHECK(one.start == 3.0);
    CHECK(one.step == 1.0);

    std::istringstream messy("# comment\n\n t , value \r\n0, 1.5\r\n1 ,2\n");
    const auto tidy = read_series(messy, "mem");
    CHECK(tidy.values == std::vector<double>{1.5, 2.0});
}

TEST_CASE("parse errors carry file, line and column") {
    CHECK(parse_error_of("t,value\n0,1\n1,abc\n") == "data.csv:3:3: invalid number 'abc'");
    CHECK(parse_error_of("t,value\n0,1\n1\n") == "data.csv:3:1: expected 2 fields, found 1");
    CHECK(parse_error_of("x,y\n0,1\n") == "data.csv:1:1: expected header 't,value'");
    CHECK(parse_error_of("# only metadata\n") == "data.csv:2:1: missing header line");
    CHECK(parse_error_of("t,value\n") == "data.csv:2:1: series has no rows");
    CHECK(parse_error_of("t,value\n0,1\n1,2\n3,4\n") == "data.csv:4:1: time axis is not uniform");
    CHECK(parse_error_of("t,value\n1,1\n0,2\n") == "data.csv:3:1: time stamps must increase");
    CHECK(parse_error_of("t,value\n0,1\n1,nan\n") == "data.csv:3:3: non-finite number");
    CHECK(parse_error_of("t,value\n0,1\n1,\n") == "data.csv:3:3: invalid number ''");
    CHECK(parse_error_of("t,,value\n") == "data.csv:1:3: empty header field");
}
