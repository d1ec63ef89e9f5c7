#include "unilines/selftest.hpp"

#include "doctest.h"

#include <sstream>

using namespace unilines;

TEST_CASE("selftest passes end to end") {
    auto items = run_selftest();
    CHECK(items.size() == 8);
    for (const auto& it : items) {
        CAPTURE(it.name);
        CAPTURE(it.detail);
        CHECK(it.passed);
    }
    CHECK(all_passed(items));
}

TEST_CASE("selftest fails on a corrupted table fixture") {
    // negative control: tamper d in row (k) and expect the table and ledger
    // items to go red
    SelftestOptions opts;
    opts.table_override = fano_table();
    opts.table_override[10].d = 26;
    auto items = run_selftest(opts);
    CHECK_FALSE(all_passed(items));
    bool item1_failed = false, item8_failed = false;
    for (const auto& it : items) {
        if (it.id == 1)
            item1_failed = !it.passed;
        if (it.id == 8)
            item8_failed = !it.passed;
    }
    CHECK(item1_failed);
    CHECK(item8_failed);
}

TEST_CASE("selftest report prints one line per item and a total") {
    auto items = run_selftest();
    std::ostringstream out;
    print_selftest(out, items, false);
    std::string s = out.str();
    size_t lines = 0;
    for (char ch : s)
        if (ch == '\n')
            ++lines;
    CHECK(lines == items.size() + 1);
    CHECK(s.find("PASS") != std::string::npos);
    CHECK(s.find("total:") != std::string::npos);
    CHECK(s.find("\033") == std::string::npos); // color off
}
