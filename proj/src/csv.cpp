#include "dynkin/csv.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "dynkin/error.hpp"

namespace dynkin::csv {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

void write(std::ostream& out, const Table& table) {
    auto line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << ',';
            out << fields[i];
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
}

std::string to_string(const Table& table) {
    std::ostringstream out;
    write(out, table);
    return out.str();
}

Table parse(std::string_view text) {
    Table table;
    bool first = true;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.emplace_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            if (fields.size() != table.header.size()) {
                throw Error(ErrorCode::config_parse,
                            "csv line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                " fields, header has " + std::to_string(table.header.size()));
            }
            table.rows.push_back(std::move(fields));
        }
    }
    return table;
}

}  // namespace dynkin::csv
