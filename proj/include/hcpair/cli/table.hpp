#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hcpair/cli/config.hpp"

namespace hcpair::cli {

// Plot-ready numeric table with a fixed schema and a metadata block carrying
// the producing configuration. Cells are doubles; enumerations are encoded
// as small integer codes explained by metadata legend entries.
struct ResultTable {
    struct Column {
        std::string name;
        std::string unit;  // "1" for dimensionless
    };

    std::string command;
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;  // ordered

    void add_row(std::initializer_list<double> values);
    void add_metadata(const std::string& key, const std::string& value);
    void add_metadata(const std::string& key, double value);
    void embed_config(const RunConfig& cfg);
};

// Comma-separated rendering: '#' metadata lines, then a name[unit] header,
// then one row per line with 17 significant digits. The timestamp is the
// last metadata line so determinism checks can strip it.
std::string render_csv(const ResultTable& table, bool include_timestamp = true);

// Structured-object rendering of the same content (JSON).
std::string render_json(const ResultTable& table, bool include_timestamp = true);

// Dispatch on RunConfig::format.
std::string render(const ResultTable& table, const std::string& format,
                   bool include_timestamp = true);

// Writes to the path, or to stdout when path is "-".
void write_output(const std::string& content, const std::string& path);

// 17-significant-digit scientific form used in every numeric cell.
std::string format_cell(double v);

// UTC timestamp, ISO 8601.
std::string current_timestamp();

}  // namespace hcpair::cli
