#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hcpair/cli/commands.hpp"
#include "hcpair/cli/config.hpp"
#include "hcpair/cli/selftest.hpp"
#include "hcpair/cli/table.hpp"
#include "hcpair/thermal.hpp"
#include "hcpair/units.hpp"

using namespace hcpair;
using namespace hcpair::cli;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has_metadata(const ResultTable& t, const std::string& key) {
    for (const auto& [k, v] : t.metadata)
        if (k == key) return true;
    return false;
}

std::string metadata_value(const ResultTable& t, const std::string& key) {
    for (const auto& [k, v] : t.metadata)
        if (k == key) return v;
    throw std::runtime_error("metadata key not found: " + key);
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + HCPAIR_CLI_PATH + "\" " + args;
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("config entries apply through the shared key = value path") {
    RunConfig cfg;
    apply_config_entry(cfg, "L", "3.5");
    CHECK(cfg.L == 3.5);
    apply_config_entry(cfg, "npoints", "1001");
    CHECK(cfg.npoints == 1001);
    apply_config_entry(cfg, "A_ladder", "0, 10, 100");
    REQUIRE(cfg.A_ladder.size() == 3);
    CHECK(cfg.A_ladder[1] == 10.0);
    apply_config_entry(cfg, "family", "cm");
    CHECK(cfg.family == "cm");

    CHECK_THROWS_AS(apply_config_entry(cfg, "bogus_key", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(cfg, "L", "abc"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(cfg, "npoints", "12.5"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(cfg, "deterministic", "maybe"), std::invalid_argument);

    // The flag parses, but the configuration contract rejects it.
    apply_config_entry(cfg, "deterministic", "false");
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("config file parsing") {
    const auto path = temp_file("hcpair_unit_config.cfg");
    {
        std::ofstream f(path);
        f << "# full-line comment\n";
        f << "L = 3.0\n";
        f << "npoints = 2001   # trailing comment\n";
        f << "alpha = 0.25, 1.75\n";
        f << "format = json-like\n";
    }
    const RunConfig cfg = parse_config_file(path.string());
    CHECK(cfg.L == 3.0);
    CHECK(cfg.npoints == 2001);
    REQUIRE(cfg.alpha.size() == 2);
    CHECK(cfg.alpha[1] == 1.75);
    CHECK(cfg.format == "json-like");
    std::filesystem::remove(path);

    const auto bad = temp_file("hcpair_unit_config_bad.cfg");
    {
        std::ofstream f(bad);
        f << "L = 2\n";
        f << "not an assignment\n";
    }
    try {
        parse_config_file(bad.string());
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::filesystem::remove(bad);

    const auto missing = temp_file("hcpair_unit_config_missing.cfg");
    std::filesystem::remove(missing);
    CHECK_THROWS_AS(parse_config_file(missing.string()), std::invalid_argument);
}

TEST_CASE("config echo reparses to the identical configuration") {
    RunConfig a;
    a.L = 0.37;
    a.hbar = 0.7;
    a.mass = 2.9;
    a.kB = 3.1;
    a.npoints = 1717;
    a.w_factor = 2.5;
    a.A_ladder = {0.0, 2.5, 1000.0};
    a.alpha = {0.25, 2.0};
    a.powerlaw_B = 1.25;
    a.probe_k = 3.5;
    a.T_ladder = {1.5, 2.5};
    a.n_max = 5;
    a.N_max = 2;
    a.loops = 3;
    a.family = "cm";
    a.n_index = 2;
    a.N_index = 1;
    a.samples = 33;
    a.format = "json-like";
    a.out = "table.json";

    const auto echo_a = config_echo(a);
    RunConfig b;
    for (const auto& [key, value] : echo_a) apply_config_entry(b, key, value);
    CHECK(config_echo(b) == echo_a);
}

TEST_CASE("resolved temperature ladder") {
    RunConfig cfg;
    const auto ladder = resolved_T_ladder(cfg);
    REQUIRE(ladder.size() == 7);
    const double T0 = characteristic_temperature(cfg.geometry(), cfg.units());
    CHECK(ladder[0] == 0.01 * T0);
    CHECK(ladder[2] == T0);
    CHECK(ladder.back() == 100.0 * T0);

    cfg.T_ladder = {3.5, 7.25};
    CHECK(resolved_T_ladder(cfg) == cfg.T_ladder);
}

TEST_CASE("result table schema enforcement and cell format") {
    ResultTable t;
    t.command = "demo";
    t.columns = {{"a", "1"}, {"b", "length"}};
    t.add_row({1.0, -0.5});
    CHECK_THROWS_AS(t.add_row({1.0}), std::logic_error);

    CHECK(format_cell(1.0) == "1.0000000000000000e+00");
    CHECK(format_cell(-0.5) == "-5.0000000000000000e-01");
}

TEST_CASE("csv rendering layout and byte determinism") {
    ResultTable t;
    t.command = "demo";
    t.columns = {{"a", "1"}, {"b", "length"}};
    t.add_metadata("note", "hello");
    t.add_row({1.0, -0.5});

    const std::string body = render_csv(t, false);
    CHECK(body.rfind("# tool: hcpair\n# version: ", 0) == 0);
    CHECK(body.find("# command: demo\n") != std::string::npos);
    CHECK(body.find("# note: hello\n") != std::string::npos);
    CHECK(body.find("a[1],b[length]\n") != std::string::npos);
    CHECK(body.find("1.0000000000000000e+00,-5.0000000000000000e-01\n") != std::string::npos);
    CHECK(body.find("# timestamp:") == std::string::npos);
    CHECK(render_csv(t, false) == body);

    // With the timestamp on, it is the final comment line before the header.
    const std::string stamped = render_csv(t, true);
    const auto ts_pos = stamped.find("# timestamp: ");
    REQUIRE(ts_pos != std::string::npos);
    CHECK(ts_pos < stamped.find("a[1],b[length]"));
}

TEST_CASE("json rendering round-trips through a parser") {
    RunConfig cfg;
    const ResultTable t = cmd_spectrum(cfg);
    const nlohmann::json j = nlohmann::json::parse(render_json(t, false));
    CHECK(j["tool"] == "hcpair");
    CHECK(j["version"] == "1.0.0");
    CHECK(j["command"] == "spectrum");
    CHECK(j["metadata"]["config.L"] == "2");
    CHECK(!j.contains("timestamp"));
    REQUIRE(j["columns"].is_array());
    REQUIRE(j["columns"].size() == 9);
    CHECK(j["columns"][0]["name"] == "scheme");
    REQUIRE(j["rows"].is_array());
    REQUIRE(j["rows"].size() == 17);
    CHECK(j["rows"][0][8] == format_cell(2.125));

    CHECK(render(t, "json-like", false) == render_json(t, false));
    CHECK(render(t, "csv", false) == render_csv(t, false));
    CHECK_THROWS_AS(render(t, "yaml", false), std::invalid_argument);
}

TEST_CASE("write_output writes files and reports failures") {
    const auto p = temp_file("hcpair_unit_out.txt");
    write_output("payload\n", p.string());
    CHECK(slurp(p) == "payload\n");
    std::filesystem::remove(p);

    CHECK_THROWS_AS(write_output("x", "/nonexistent_dir_hcpair/file.txt"),
                    std::invalid_argument);
}

TEST_CASE("spectrum command table") {
    RunConfig cfg;
    const ResultTable t = cmd_spectrum(cfg);
    REQUIRE(t.columns.size() == 9);
    REQUIRE(t.rows.size() == 17);  // 4 x 4 pair levels plus the free reference
    CHECK(t.rows[0][0] == 0.0);
    CHECK(t.rows[0][8] == 2.125);
    const auto& ref = t.rows.back();
    CHECK(ref[0] == 1.0);
    CHECK(ref[8] == 0.25);
    CHECK(has_metadata(t, "config.L"));
    CHECK(has_metadata(t, "energy_scale_ratio"));
}

TEST_CASE("compare command flags the ground rows") {
    RunConfig cfg;
    const ResultTable t = cmd_compare(cfg);
    REQUIRE(t.rows.size() == 33);  // 16 interacting + 16 integer + free reference
    int ground_rows = 0;
    for (const auto& row : t.rows) ground_rows += row[5] == 1.0 ? 1 : 0;
    CHECK(ground_rows == 3);
    CHECK(t.rows[0][3] == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(t.rows[0][4] == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(t.rows[16][3] == -1.0);  // first integer-scheme row, (s1, s2) = (1, 1)
    CHECK(t.rows[16][4] == 1.0);
    CHECK(t.rows.back()[0] == 2.0);
}

TEST_CASE("eigenfunction command families") {
    RunConfig cfg;
    cfg.samples = 64;

    const ResultTable rel = cmd_eigenfunction(cfg);
    REQUIRE(rel.rows.size() == 64);
    REQUIRE(rel.columns.size() == 4);
    CHECK(rel.rows.front()[0] == -1.0);
    CHECK(rel.rows.back()[0] == 1.0);
    CHECK(metadata_value(rel, "family") == "relative");

    RunConfig cm_cfg = cfg;
    cm_cfg.family = "cm";
    const ResultTable cm = cmd_eigenfunction(cm_cfg);
    REQUIRE(cm.rows.size() == 64);
    CHECK(cm.rows.front()[1] == doctest::Approx(0.0).epsilon(1e-14));  // wall node
    CHECK(cm.rows.back()[1] == doctest::Approx(0.0).epsilon(1e-14));

    RunConfig orb_cfg = cfg;
    orb_cfg.family = "orbital";
    const ResultTable orb = cmd_eigenfunction(orb_cfg);
    REQUIRE(orb.rows.size() == 64);
    REQUIRE(orb.columns.size() == 4);
    for (const auto& row : orb.rows) CHECK(row[2] == 0.0);  // X = 0 slice is real
    CHECK(has_metadata(orb, "norm_B"));
}

TEST_CASE("expectation command") {
    RunConfig cfg;  // loops = 2 spans one full wavelength
    const ResultTable t = cmd_expectation(cfg);
    REQUIRE(t.rows.size() == 4);
    const auto& r0 = t.rows[0];
    CHECK(r0[3] == doctest::Approx(2.0).epsilon(1e-15));  // x_max = lambda
    CHECK(r0[4] == doctest::Approx(1.0).epsilon(1e-13));  // closed form = d
    CHECK(r0[5] == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& row : t.rows) {
        CHECK(row[6] >= 2.0 * pi - 1e-9);
        CHECK(row[8] == doctest::Approx(0.5 * row[7]).epsilon(1e-9));
    }
}

TEST_CASE("alpha scan command") {
    RunConfig cfg;
    const ResultTable t = cmd_alpha_scan(cfg);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0][1] == 0.0);
    CHECK(t.rows[1][1] == 1.0);
    CHECK(t.rows[2][1] == 2.0);
    CHECK(t.rows[1][2] == 2.0);  // finite value B k^2 / 2 at the default probe
    CHECK(t.rows[0][4] == 0.5);
    CHECK(t.rows[2][4] == -0.5);
    CHECK(t.rows[0][3] == doctest::Approx(0.5).epsilon(0.05));
    CHECK(t.rows[1][3] == doctest::Approx(0.0).epsilon(0.02));
    CHECK(t.rows[2][3] == doctest::Approx(-0.5).epsilon(0.05));

    RunConfig mixed;
    mixed.alpha = {-1.0, 0.5};
    const ResultTable kept = cmd_alpha_scan(mixed);
    REQUIRE(kept.rows.size() == 1);
    CHECK(kept.rows[0][0] == 0.5);

    RunConfig bad;
    bad.alpha = {-1.0};
    CHECK_THROWS_AS(cmd_alpha_scan(bad), std::invalid_argument);
}

TEST_CASE("thermal command") {
    RunConfig cfg;
    const ResultTable t = cmd_thermal(cfg);
    REQUIRE(t.rows.size() == 7);
    CHECK(t.rows[0][1] == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(t.rows[2][1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t.rows[2][3] == doctest::Approx(0.0024787521766663584).epsilon(1e-12));
    CHECK(t.rows[0][5] == doctest::Approx(1.0).epsilon(1e-14));  // cold row: F -> F0

    const double T0 = characteristic_temperature(cfg.geometry(), cfg.units());
    RunConfig mixed;
    mixed.T_ladder = {-1.0, T0};
    const ResultTable kept = cmd_thermal(mixed);
    REQUIRE(kept.rows.size() == 1);
    CHECK(kept.rows[0][0] == T0);

    RunConfig bad;
    bad.T_ladder = {-1.0};
    CHECK_THROWS_AS(cmd_thermal(bad), std::invalid_argument);
}

TEST_CASE("force command") {
    RunConfig cfg;
    const ResultTable t = cmd_force(cfg);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0][0] == 0.5);
    CHECK(t.rows[1][0] == 1.0);
    CHECK(t.rows[2][0] == 2.0);
    for (const auto& row : t.rows) {
        CHECK(row[4] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(row[3] <= 1e-8);
    }
}

TEST_CASE("delta limit command") {
    RunConfig cfg;
    cfg.npoints = 401;
    cfg.A_ladder = {0.0, 1e2, 1e4};
    const ResultTable t = cmd_delta_limit(cfg);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0][1] == 1.0);
    CHECK(t.rows[1][1] == 0.0);
    CHECK(t.rows[2][1] == 0.0);
    CHECK(has_metadata(t, "v_expect_tail_slope"));
    CHECK(t.rows[2][6] > 0.9);  // E0 / 2 eps0 approaches 1 from below
    CHECK(t.rows[2][6] < 1.0);
    CHECK(t.rows[2][4] < t.rows[1][4]);  // <V> falls as A grows
}

TEST_CASE("invariant suite negative control fails loudly") {
    RunConfig cfg;
    cfg.npoints = 1001;
    const SelftestReport report = run_invariant_suite(cfg, 1.001);
    CHECK(!report.all_pass);
    bool found = false;
    for (const auto& item : report.items) {
        if (item.name == "c03_numeric_spectrum_max_rel_err") {
            found = true;
            CHECK(!item.pass);
        }
    }
    CHECK(found);
    const std::string text = format_selftest_report(report);
    CHECK(text.find("RESULT: FAIL") != std::string::npos);
    CHECK(text.find("FAIL c03_numeric_spectrum_max_rel_err") != std::string::npos);
}

TEST_CASE("command line end to end") {
    CHECK(run_cli("spectrum --out /dev/null") == 0);
    CHECK(run_cli("spectrum --L=-1 --out /dev/null 2>/dev/null") == 2);
    CHECK(run_cli("bogus-subcommand 2>/dev/null") == 2);
    CHECK(run_cli("--version >/dev/null") == 0);

    const auto out_path = temp_file("hcpair_unit_cli_out.csv");
    std::filesystem::remove(out_path);
    CHECK(run_cli("eigenfunction --family orbital --samples 16 --out \"" +
                  out_path.string() + "\"") == 0);
    const std::string body = slurp(out_path);
    CHECK(body.rfind("# tool: hcpair", 0) == 0);
    std::filesystem::remove(out_path);
}

TEST_CASE("command line config file round trip") {
    const auto cfg_path = temp_file("hcpair_unit_cli.cfg");
    const auto out_path = temp_file("hcpair_unit_cli_out.json");
    {
        std::ofstream f(cfg_path);
        f << "# sample configuration\n";
        f << "family = cm\n";
        f << "samples = 16\n";
        f << "format = json-like\n";
    }
    CHECK(run_cli("eigenfunction --config \"" + cfg_path.string() + "\" --out \"" +
                  out_path.string() + "\"") == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp(out_path));
    CHECK(j["command"] == "eigenfunction");
    CHECK(j["metadata"]["config.family"] == "cm");
    REQUIRE(j["rows"].is_array());
    CHECK(j["rows"].size() == 16);
    std::filesystem::remove(cfg_path);
    std::filesystem::remove(out_path);
}
