#include "unilines/json_out.hpp"

#include "doctest.h"

using namespace unilines;

namespace {

// parse + re-serialize must reproduce the bytes
void check_roundtrip(const Json& j) {
    std::string s = j.dump(2);
    Json parsed = Json::parse(s);
    CHECK(parsed.dump(2) == s);
}

} // namespace

TEST_CASE("classify json round-trips and keeps rationals exact") {
    HypothesisFlags flags{true, true, false, false, false};
    PolarizedPair p(3, 27, 19, flags);
    Json j = classify_json(p, classify(p));
    check_roundtrip(j);
    CHECK(j["outcome"] == "ExceptionalP3Cubic");
    CHECK(j["clifford_bound"] == "-9");
    CHECK(j["delta_genus"] == "10");
    CHECK(j["fired_rules"].size() == 1);
    CHECK(j["fired_rules"][0]["id"] == "T1x");
}

TEST_CASE("bundle json round-trips") {
    BundleContext ctx(0, -2);
    BundleInvariants inv = bundle_invariants(ctx, 1);
    auto bounds = check_veronese_bounds(inv.H_cubed, inv.n_expected);
    Json j = bundle_json(ctx, 1, inv, check_identity_chi(ctx, 1), bounds);
    check_roundtrip(j);
    CHECK(j["H_cubed"] == "12");
    CHECK(j["n_expected"] == "11");
    CHECK(j["veronese_bounds"]["bound_d_equal"] == true);
}

TEST_CASE("fano row json carries exact fraction strings") {
    const FanoRow* row = find_row('q');
    REQUIRE(row != nullptr);
    Json j = fano_row_json(*row);
    check_roundtrip(j);
    CHECK(j["rho"] == "1/3");
    CHECK(j["ratio"] == "1/2");
    CHECK(j["verified"] == true);
}

TEST_CASE("fano verify json round-trips") {
    Json j = fano_verify_json(verify_table());
    check_roundtrip(j);
    CHECK(j["ok"] == true);
    CHECK(j["rows_verified"] == 20);
}

TEST_CASE("veronese json round-trips") {
    Json j = veronese_json(count_with_redraw(2, 42), 2);
    check_roundtrip(j);
    CHECK(j["distinct_roots"] == 6);
    CHECK(j["expected"] == 6);
}

TEST_CASE("sweep json round-trips") {
    Json j = sweep_json(sharpness_sweep(5));
    check_roundtrip(j);
    CHECK(j["rows"].size() == 5);
    CHECK(j["all_equalities_hold"] == true);
}
