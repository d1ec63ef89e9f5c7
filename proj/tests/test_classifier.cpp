#include "unilines/classifier.hpp"

#include "unilines/fano_table.hpp"

#include "doctest.h"

#include <algorithm>

using namespace unilines;

namespace {

const HypothesisFlags kGgBig{true, true, false, false, false};
const HypothesisFlags kGgBigTerminal{true, true, false, false, true};
const HypothesisFlags kSmoothVa{false, false, true, true, false};

bool fired(const Verdict& v, const char* id) {
    return std::any_of(v.fired_rules.begin(), v.fired_rules.end(),
                       [&](const FiredRule& r) { return r.id == id; });
}

// exclusion equalities of each rule, re-evaluated per degree
bool excluded(const std::string& id, long d, long n, bool terminal) {
    if (id == "T1")
        return d == 27 && n == 19;
    if (id == "EB") {
        bool ex = (d == n - 1 && n <= 9) || (d == n - 2 && n <= 6);
        if (!terminal)
            ex = ex || (d == n && 5 <= n && n <= 8);
        return ex;
    }
    return false;
}

} // namespace

TEST_CASE("golden verdicts") {
    SUBCASE("(3, 27, 19) is the exceptional cubic-P3 dichotomy") {
        Verdict v = classify(PolarizedPair(3, 27, 19, kGgBig));
        CHECK(v.outcome == Outcome::ExceptionalP3Cubic);
        CHECK(v.fired_rules.size() == 1);
        CHECK(fired(v, "T1x"));
        CHECK_FALSE(fired(v, "T1"));
        CHECK(v.clifford_bound == Rational(-9));
    }
    SUBCASE("(3, 12, 11) terminal: degree one via the easy bound") {
        Verdict v = classify(PolarizedPair(3, 12, 11, kGgBigTerminal));
        CHECK(v.outcome == Outcome::DegreeOne);
        CHECK(v.fired_rules.size() == 1);
        CHECK(fired(v, "EB"));
        CHECK_FALSE(fired(v, "T1")); // 12 < 2*11-10 fails
    }
    SUBCASE("(3, 24, 17): big uniruled system only, clifford bound -8") {
        Verdict v = classify(PolarizedPair(3, 24, 17, kGgBig));
        CHECK(v.outcome == Outcome::BigUniruledSystemOnly);
        CHECK(v.fired_rules.empty());
        CHECK(v.clifford_bound == Rational(-8));
    }
    SUBCASE("(5, 9, 16): degree one in higher dimension") {
        Verdict v = classify(PolarizedPair(5, 9, 16, kGgBig));
        CHECK(v.outcome == Outcome::DegreeOne);
        CHECK(v.fired_rules.size() == 1);
        CHECK(fired(v, "C12"));
        CHECK_FALSE(v.clifford_bound.has_value());
    }
    SUBCASE("(3, 11, 12) smooth and very ample: degree one via HB") {
        Verdict v = classify(PolarizedPair(3, 11, 12, kSmoothVa));
        CHECK(v.outcome == Outcome::DegreeOne);
        CHECK(v.fired_rules.size() == 1);
        CHECK(fired(v, "HB"));
    }
}

TEST_CASE("hypothesis gating") {
    CHECK_THROWS_WITH_AS(classify(PolarizedPair(3, 5, 5, HypothesisFlags{})),
                         "no applicable hypotheses", std::invalid_argument);
    // partial flags that enable no rule group are equally unusable
    HypothesisFlags only_gg{true, false, false, false, false};
    CHECK_THROWS_AS(classify(PolarizedPair(3, 5, 5, only_gg)), std::invalid_argument);
    CHECK_THROWS_WITH_AS(classify(PolarizedPair(2, 5, 5, kGgBig)), "surface case out of scope",
                         std::invalid_argument);
    CHECK_THROWS_AS(PolarizedPair(1, 1, 1, kGgBig), std::invalid_argument);
    CHECK_THROWS_AS(PolarizedPair(3, 0, 1, kGgBig), std::invalid_argument);
}

TEST_CASE("delta genus") {
    CHECK(delta_genus(3, Rational(27), Rational(19)) == Rational(10));
    // minimal degree: d = n - k + 1 gives delta = 0
    for (int k = 2; k <= 6; ++k)
        for (long n = k + 1; n <= k + 10; ++n)
            CHECK(delta_genus(k, Rational(n - k + 1), Rational(n)) == Rational(0));
    CHECK(delta_genus(4, Rational(9), Rational(16)) == Rational(-4));
}

TEST_CASE("delta genus equivalence with the higher-dimensional bound") {
    // d < 2(n-k)-4 iff delta < n-k-5, over a grid of more than 1000 points
    int checked = 0;
    for (int k = 3; k <= 6; ++k)
        for (long n = 4; n <= 24; ++n)
            for (long d = 1; d <= 20; ++d) {
                bool lhs = Rational(d) < Rational(2) * (Rational(n) - Rational(k)) - Rational(4);
                bool rhs = delta_genus(k, Rational(d), Rational(n)) <
                           Rational(n) - Rational(k) - Rational(5);
                CHECK(lhs == rhs);
                ++checked;
            }
    CHECK(checked >= 1000);
}

TEST_CASE("rule inequalities are monotone decreasing in d") {
    const HypothesisFlags combos[] = {kGgBig, kGgBigTerminal, kSmoothVa};
    for (const auto& flags : combos)
        for (long n = 4; n <= 24; ++n)
            for (long d = 2; d <= 40; ++d) {
                Verdict at_d = classify(PolarizedPair(3, d, n, flags));
                Verdict at_prev = classify(PolarizedPair(3, d - 1, n, flags));
                for (const auto& rule : at_d.fired_rules) {
                    if (rule.id == "T1x")
                        continue; // the exceptional equality is not an inequality
                    bool still = fired(at_prev, rule.id.c_str()) ||
                                 excluded(rule.id, d - 1, n, flags.terminal_q_factorial) ||
                                 (rule.id == "T1" && fired(at_prev, "T1x"));
                    CHECK_MESSAGE(still, "rule ", rule.id, " fired at d=", d, ", n=", n,
                                  " but vanished at d-1");
                }
            }
}

TEST_CASE("higher-dimensional rule is monotone in d") {
    for (int k = 4; k <= 6; ++k)
        for (long n = k + 6; n <= k + 20; ++n)
            for (long d = 2; d <= 40; ++d) {
                Verdict at_d = classify(PolarizedPair(k, d, n, kGgBig));
                if (fired(at_d, "C12"))
                    CHECK(fired(classify(PolarizedPair(k, d - 1, n, kGgBig)), "C12"));
            }
}

TEST_CASE("catalog rows never conclude degree one via T1") {
    // with no contracted curves, the catalog pairs sit on or above the T1
    // threshold except the exceptional row (k)
    for (const auto& row : fano_table()) {
        CAPTURE(row.label);
        Verdict v = classify(PolarizedPair(3, row.d, row.n, kGgBig));
        CHECK_FALSE(fired(v, "T1"));
        if (row.label == 'k')
            CHECK(v.outcome == Outcome::ExceptionalP3Cubic);
        else
            CHECK(v.outcome != Outcome::ExceptionalP3Cubic);
    }
}

TEST_CASE("exceptional verdict requires (3, 27, 19) exactly") {
    for (long d = 1; d <= 60; ++d)
        for (long n = 4; n <= 30; ++n) {
            Verdict v = classify(PolarizedPair(3, d, n, kGgBig));
            if (v.outcome == Outcome::ExceptionalP3Cubic) {
                CHECK(d == 27);
                CHECK(n == 19);
            }
            if (v.outcome == Outcome::DegreeOne)
                CHECK_FALSE(v.fired_rules.empty());
        }
}

TEST_CASE("sharp inequality check") {
    SUBCASE("P2 x P1 surface data is tight for a = 3") {
        SharpInequality s =
            sharp_inequality_check(Rational(2, 3), Rational(36), Rational(-8), Rational(-1), 0);
        CHECK(s.lhs == Rational(0));
        CHECK(s.rhs == Rational(0));
        CHECK(s.holds);
    }
    SUBCASE("zero surface data with contracted curves") {
        SharpInequality s =
            sharp_inequality_check(Rational(1, 2), Rational(0), Rational(0), Rational(0), 5);
        CHECK(s.lhs == Rational(0));
        CHECK(s.rhs == Rational(-5));
        CHECK(s.holds);
    }
    SUBCASE("boundary threshold rho = 1/3") {
        SharpInequality s =
            sharp_inequality_check(Rational(1, 3), Rational(1), Rational(-1), Rational(1), 0);
        CHECK(s.lhs == Rational(1, 4));
        CHECK(s.rhs == Rational(0));
        CHECK(s.holds);
    }
    SUBCASE("rho outside [1/3, 1) is rejected") {
        CHECK_THROWS_WITH_AS(
            sharp_inequality_check(Rational(1, 4), Rational(1), Rational(0), Rational(1), 0),
            "hypothesis violated", std::domain_error);
        CHECK_THROWS_AS(
            sharp_inequality_check(Rational(1), Rational(1), Rational(0), Rational(1), 0),
            std::domain_error);
    }
}
