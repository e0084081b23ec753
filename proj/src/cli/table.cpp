#include "hcpair/cli/table.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "hcpair/version.hpp"

namespace hcpair::cli {

void ResultTable::add_row(std::initializer_list<double> values) {
    if (values.size() != columns.size())
        throw std::logic_error("ResultTable: row arity does not match schema");
    rows.emplace_back(values);
}

void ResultTable::add_metadata(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
}

void ResultTable::add_metadata(const std::string& key, double value) {
    metadata.emplace_back(key, format_cell(value));
}

void ResultTable::embed_config(const RunConfig& cfg) {
    for (const auto& [key, value] : config_echo(cfg))
        metadata.emplace_back("config." + key, value);
}

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string current_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_csv(const ResultTable& table, bool include_timestamp) {
    std::string out;
    out += "# tool: ";
    out += tool_name;
    out += "\n# version: ";
    out += tool_version;
    out += "\n# command: " + table.command + "\n";
    for (const auto& [key, value] : table.metadata)
        out += "# " + key + ": " + value + "\n";
    if (include_timestamp) out += "# timestamp: " + current_timestamp() + "\n";

    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c].name + "[" + table.columns[c].unit + "]";
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const ResultTable& table, bool include_timestamp) {
    nlohmann::ordered_json j;
    j["tool"] = tool_name;
    j["version"] = tool_version;
    j["command"] = table.command;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) meta[key] = value;
    j["metadata"] = std::move(meta);
    if (include_timestamp) j["timestamp"] = current_timestamp();
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto& col : table.columns)
        cols.push_back({{"name", col.name}, {"unit", col.unit}});
    j["columns"] = std::move(cols);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (double v : row) r.push_back(format_cell(v));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string render(const ResultTable& table, const std::string& format,
                   bool include_timestamp) {
    if (format == "csv") return render_csv(table, include_timestamp);
    if (format == "json-like") return render_json(table, include_timestamp);
    throw std::invalid_argument("render: unknown format '" + format + "'");
}

void write_output(const std::string& content, const std::string& path) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("write_output: cannot open '" + path + "'");
    f << content;
    if (!f) throw std::runtime_error("write_output: write to '" + path + "' failed");
}

}  // namespace hcpair::cli
