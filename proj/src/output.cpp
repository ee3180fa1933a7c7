#include "palcount/output.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace palcount::output {

Format parse_format(const std::string& text) {
    if (text == "csv")
        return Format::csv;
    if (text == "json")
        return Format::json;
    throw std::domain_error("unknown format (expected csv or json): " + text);
}

Cell str_cell(std::string text) {
    return Cell{std::move(text), false};
}

Cell num_cell(double value) {
    std::ostringstream out;
    out << value;
    return Cell{out.str(), true};
}

RecordTable::RecordTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty())
        throw std::domain_error("a table needs at least one column");
}

void RecordTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw std::domain_error("row width does not match the column count");
    rows_.push_back(std::move(row));
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string RecordTable::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << (i ? "," : "") << csv_escape(columns_[i]);
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_escape(row[i].text);
        out << '\n';
    }
    return out.str();
}

namespace {

std::string json_escape(const std::string& text) {
    std::string escaped;
    escaped.reserve(text.size() + 2);
    for (char ch : text) {
        switch (ch) {
            case '"': escaped += "\\\""; break;
            case '\\': escaped += "\\\\"; break;
            case '\n': escaped += "\\n"; break;
            case '\r': escaped += "\\r"; break;
            case '\t': escaped += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    escaped += buf;
                } else {
                    escaped += ch;
                }
        }
    }
    return escaped;
}

}  // namespace

std::string RecordTable::to_json() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out << (r ? ",\n " : "\n ") << "{";
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            out << (i ? "," : "") << '"' << json_escape(columns_[i]) << "\":";
            if (rows_[r][i].numeric)
                out << rows_[r][i].text;
            else
                out << '"' << json_escape(rows_[r][i].text) << '"';
        }
        out << "}";
    }
    out << "\n]\n";
    return out.str();
}

std::string RecordTable::render(Format format) const {
    return format == Format::csv ? to_csv() : to_json();
}

}  // namespace palcount::output
