#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "relgraph/util.hpp"

namespace relgraph::csv {

// RFC-4180 reader/writer. Fields containing comma, quote, CR or LF are
// quoted; embedded quotes are doubled. Both LF and CRLF records parse.

struct Document {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline std::vector<std::vector<std::string>> parse(std::string_view text,
                                                   const std::string& where = "<csv>") {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field_started && !field.empty())
                    fail(where + ":" + std::to_string(line) + ": quote inside unquoted field");
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') break;  // handled by \n
                end_record();
                ++line;
                break;
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field.push_back(c);
                field_started = true;
                break;
        }
    }
    if (in_quotes) fail(where + ": unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) end_record();
    return records;
}

inline Document read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open CSV file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto records = parse(buf.str(), path);
    if (records.empty()) fail(path + ": empty CSV (missing header row)");
    Document doc;
    doc.header = std::move(records.front());
    doc.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        if (doc.rows[r].size() != doc.header.size())
            fail(path + ": row " + std::to_string(r + 1) + " has " +
                 std::to_string(doc.rows[r].size()) + " fields, header has " +
                 std::to_string(doc.header.size()));
    }
    return doc;
}

inline std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline void write_record(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        out << escape(fields[i]);
    }
    out.put('\n');
}

inline void write_file(const std::string& path, const Document& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write CSV file: " + path);
    write_record(out, doc.header);
    for (const auto& row : doc.rows) write_record(out, row);
    if (!out) fail("I/O error writing " + path);
}

}  // namespace relgraph::csv
