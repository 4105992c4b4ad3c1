#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dynkin::csv {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Fixed-point rendering with `decimals` places (tables).
std::string format_fixed(double v, int decimals);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Comma separated, LF line endings, header row first. Fields never
/// contain commas, quotes or newlines.
void write(std::ostream& out, const Table& table);
std::string to_string(const Table& table);

/// Inverse of write(). Throws Error(config_parse) on ragged rows.
Table parse(std::string_view text);

}  // namespace dynkin::csv
