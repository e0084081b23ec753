#include "hcpair/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hcpair/thermal.hpp"

namespace hcpair::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse number '" +
                                    value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse integer '" +
                                    value + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw std::invalid_argument("config key '" + key + "': empty list entry");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw std::invalid_argument("config key '" + key + "': empty list");
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
    }
    return s;
}

}  // namespace

void RunConfig::validate() const {
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("config: L must be finite and > 0");
    units().validate();
    if (npoints < 16 || npoints > 2000000)
        throw std::invalid_argument("config: npoints must lie in [16, 2000000]");
    if (!(w_factor >= 2.0))
        throw std::invalid_argument("config: w_factor must be >= 2 grid spacings");
    if (A_ladder.empty()) throw std::invalid_argument("config: A_ladder must not be empty");
    for (std::size_t i = 0; i < A_ladder.size(); ++i) {
        if (A_ladder[i] < 0.0 || !std::isfinite(A_ladder[i]))
            throw std::invalid_argument("config: A_ladder entries must be finite and >= 0");
        if (i > 0 && A_ladder[i] <= A_ladder[i - 1])
            throw std::invalid_argument("config: A_ladder must ascend strictly");
    }
    if (alpha.empty()) throw std::invalid_argument("config: alpha list must not be empty");
    if (!(powerlaw_B > 0.0) || !std::isfinite(powerlaw_B))
        throw std::invalid_argument("config: powerlaw_B must be finite and > 0");
    if (!(probe_k > 0.0) || !std::isfinite(probe_k))
        throw std::invalid_argument("config: probe_k must be finite and > 0");
    for (double T : T_ladder)
        if (!std::isfinite(T))
            throw std::invalid_argument("config: T_ladder entries must be finite");
    if (n_max < 0 || N_max < 0)
        throw std::invalid_argument("config: n_max and N_max must be >= 0");
    if (n_max > 512 || N_max > 512)
        throw std::invalid_argument("config: n_max and N_max must be <= 512");
    if (loops < 1 || loops > 1024)
        throw std::invalid_argument("config: loops must lie in [1, 1024]");
    if (family != "relative" && family != "cm" && family != "orbital")
        throw std::invalid_argument("config: family must be relative, cm or orbital");
    if (n_index < 0 || N_index < 0)
        throw std::invalid_argument("config: n_index and N_index must be >= 0");
    if (samples < 8 || samples > 1000000)
        throw std::invalid_argument("config: samples must lie in [8, 1000000]");
    if (format != "csv" && format != "json-like")
        throw std::invalid_argument("config: format must be csv or json-like");
    if (out.empty()) throw std::invalid_argument("config: out must not be empty");
    if (!deterministic)
        throw std::invalid_argument("config: deterministic cannot be disabled; "
                                    "all algorithms are seedless by design");
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "L") cfg.L = parse_double(key, value);
    else if (key == "hbar") cfg.hbar = parse_double(key, value);
    else if (key == "mass") cfg.mass = parse_double(key, value);
    else if (key == "kB") cfg.kB = parse_double(key, value);
    else if (key == "npoints") cfg.npoints = parse_int(key, value);
    else if (key == "w_factor") cfg.w_factor = parse_double(key, value);
    else if (key == "A_ladder") cfg.A_ladder = parse_list(key, value);
    else if (key == "alpha") cfg.alpha = parse_list(key, value);
    else if (key == "powerlaw_B") cfg.powerlaw_B = parse_double(key, value);
    else if (key == "probe_k") cfg.probe_k = parse_double(key, value);
    else if (key == "T_ladder") cfg.T_ladder = parse_list(key, value);
    else if (key == "n_max") cfg.n_max = parse_int(key, value);
    else if (key == "N_max") cfg.N_max = parse_int(key, value);
    else if (key == "loops") cfg.loops = parse_int(key, value);
    else if (key == "family") cfg.family = value;
    else if (key == "n_index") cfg.n_index = parse_int(key, value);
    else if (key == "N_index") cfg.N_index = parse_int(key, value);
    else if (key == "samples") cfg.samples = parse_int(key, value);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "deterministic") {
        if (value == "true") cfg.deterministic = true;
        else if (value == "false") cfg.deterministic = false;
        else throw std::invalid_argument("config key 'deterministic': expected true or false");
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open file '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not a key = value assignment");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " has an empty key or value");
        apply_config_entry(cfg, key, value);
    }
    return cfg;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("L", format_double(cfg.L));
    kv.emplace_back("hbar", format_double(cfg.hbar));
    kv.emplace_back("mass", format_double(cfg.mass));
    kv.emplace_back("kB", format_double(cfg.kB));
    kv.emplace_back("npoints", std::to_string(cfg.npoints));
    kv.emplace_back("w_factor", format_double(cfg.w_factor));
    kv.emplace_back("A_ladder", format_list(cfg.A_ladder));
    kv.emplace_back("alpha", format_list(cfg.alpha));
    kv.emplace_back("powerlaw_B", format_double(cfg.powerlaw_B));
    kv.emplace_back("probe_k", format_double(cfg.probe_k));
    if (!cfg.T_ladder.empty()) kv.emplace_back("T_ladder", format_list(cfg.T_ladder));
    kv.emplace_back("n_max", std::to_string(cfg.n_max));
    kv.emplace_back("N_max", std::to_string(cfg.N_max));
    kv.emplace_back("loops", std::to_string(cfg.loops));
    kv.emplace_back("family", cfg.family);
    kv.emplace_back("n_index", std::to_string(cfg.n_index));
    kv.emplace_back("N_index", std::to_string(cfg.N_index));
    kv.emplace_back("samples", std::to_string(cfg.samples));
    kv.emplace_back("format", cfg.format);
    kv.emplace_back("out", cfg.out);
    kv.emplace_back("deterministic", cfg.deterministic ? "true" : "false");
    return kv;
}

std::vector<double> resolved_T_ladder(const RunConfig& cfg) {
    if (!cfg.T_ladder.empty()) return cfg.T_ladder;
    const double T0 = characteristic_temperature(cfg.geometry(), cfg.units());
    std::vector<double> ladder{0.01, 0.1, 1.0, 2.0, 5.0, 10.0, 100.0};
    for (double& T : ladder) T *= T0;
    return ladder;
}

}  // namespace hcpair::cli
