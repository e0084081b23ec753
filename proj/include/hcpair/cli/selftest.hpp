#pragma once

#include <string>
#include <vector>

#include "hcpair/cli/config.hpp"

namespace hcpair::cli {

// One measured invariant. pass is measured-vs-bound under op, one of
// "<=", ">=", ">", "==" (== compares exactly; bounds of 0 mean bit-exact).
struct SelftestItem {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    std::string op = "<=";
    bool pass = false;
};

struct SelftestReport {
    std::vector<SelftestItem> items;
    bool all_pass = false;
    double seconds = 0.0;
};

// Runs every cross-module invariant at the given config. Item names carry a
// cNN_ prefix tying them to the numbered acceptance checks in the README.
// stencil_scale != 1 de-tunes the kinetic stencil (negative control: the
// suite must then fail).
SelftestReport run_invariant_suite(const RunConfig& cfg, double stencil_scale = 1.0);

// Human-readable report, one line per item plus a summary.
std::string format_selftest_report(const SelftestReport& report);

}  // namespace hcpair::cli
