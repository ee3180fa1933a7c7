#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Column-oriented result tables the CLI prints as CSV (default) or JSON.
// Integer results are carried as decimal strings so arbitrary-precision
// values survive the trip; elapsed times are the only numeric cells.
namespace palcount::output {

enum class Format { csv, json };
Format parse_format(const std::string& text);

struct Cell {
    std::string text;
    bool numeric{false};
};

Cell str_cell(std::string text);
Cell num_cell(double value);

class RecordTable {
public:
    explicit RecordTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);  // must match the column count

    std::string to_csv() const;   // RFC 4180 quoting, header row first
    std::string to_json() const;  // array of objects, keys in column order

    std::string render(Format format) const;

    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

std::string csv_escape(const std::string& field);

}  // namespace palcount::output
