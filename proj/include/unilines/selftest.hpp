#pragma once

#include "unilines/fano_table.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace unilines {

struct SelftestOptions {
    /// Replacement catalog for negative-control fixtures; empty means the
    /// embedded table.
    std::vector<FanoRow> table_override;
};

struct SelftestItem {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0.0;
};

/// Runs the eight verification items end to end. Each item carries its own
/// runtime budget; exceeding it fails the item.
std::vector<SelftestItem> run_selftest(const SelftestOptions& opts = {});

bool all_passed(const std::vector<SelftestItem>& items);

/// One pass/fail line per item plus a total-time line.
void print_selftest(std::ostream& os, const std::vector<SelftestItem>& items, bool color);

} // namespace unilines
