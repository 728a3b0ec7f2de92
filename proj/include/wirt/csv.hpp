#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wirt/errors.hpp"

namespace wirt::csv {

// RFC 4180 quoting: fields containing separators, quotes or newlines are
// wrapped in double quotes, embedded quotes doubled.
inline std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ',';
        out += escape(fields[i]);
    }
    out += '\n';
    return out;
}

inline std::vector<std::vector<std::string>> parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, field_started = false;
    const auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    const auto end_row = [&] {
        end_field();
        rows.push_back(row);
        row.clear();
    };
    for (size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        switch (ch) {
        case '"':
            quoted = true;
            field_started = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            break;
        case '\n':
            if (field_started || !field.empty() || !row.empty())
                end_row();
            break;
        default:
            field += ch;
            field_started = true;
        }
    }
    if (field_started || !field.empty() || !row.empty())
        end_row();
    return rows;
}

inline std::vector<std::vector<std::string>> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UnreadableInput(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace wirt::csv
