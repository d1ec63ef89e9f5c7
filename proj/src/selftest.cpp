#include "unilines/selftest.hpp"

#include "unilines/bundle.hpp"
#include "unilines/classifier.hpp"
#include "unilines/veronese.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace unilines {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0)
                detail << "; ";
            detail << what;
        }
    }
};

SelftestItem run_item(int id, const std::string& name, double budget_ms,
                      const std::function<void(Check&)>& body) {
    SelftestItem item;
    item.id = id;
    item.name = name;
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    item.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (budget_ms > 0 && item.millis >= budget_ms)
        c.expect(false, "exceeded " + std::to_string(static_cast<long>(budget_ms)) + " ms budget");
    item.passed = c.ok;
    item.detail = c.ok ? "" : c.detail.str();
    return item;
}

// Independent intersection numbers on P2 x P1: classes p*L + q*F with
// L^3 = L*F^2 = F^2 = 0 and L^2*F = 1.
long p2p1_triple(std::pair<long, long> c1, std::pair<long, long> c2, std::pair<long, long> c3) {
    return c1.first * c2.first * c3.second + c1.first * c2.second * c3.first +
           c1.second * c2.first * c3.first;
}

} // namespace

std::vector<SelftestItem> run_selftest(const SelftestOptions& opts) {
    const std::vector<FanoRow>& table =
        opts.table_override.empty() ? fano_table() : opts.table_override;
    std::vector<SelftestItem> items;

    items.push_back(run_item(1, "fano-table-reproduction", 10.0, [&](Check& c) {
        TableCheck tc = verify_rows(table);
        c.expect(tc.rows_checked == 20, "expected 20 rows");
        for (const auto& m : tc.mismatches)
            c.expect(false, m);
    }));

    items.push_back(run_item(2, "sharpness-family", 100.0, [&](Check& c) {
        for (long a = 1; a <= 50; ++a) {
            BundleInvariants inv = bundle_invariants(BundleContext(0, -2), a);
            std::string at = " at a = " + std::to_string(a);
            c.expect(inv.H_cubed == Rational(12 * a), "H^3 != 12a" + at);
            c.expect(inv.chi_H == Rational(6 * (a + 1)), "chi != 6(a+1)" + at);
            c.expect(inv.k_degenerate == Rational(3 * a), "k != 3a" + at);
            c.expect(inv.n_expected == Rational(6 * a + 5), "n != 6a+5" + at);
            c.expect(inv.H_cubed == Rational(2) * inv.n_expected - Rational(10),
                     "d != 2n-10" + at);
        }
    }));

    items.push_back(run_item(3, "chi-identity-grid", 1000.0, [&](Check& c) {
        for (long g = 0; g <= 4; ++g)
            for (long b = -8; b <= 8; ++b)
                for (long a = -8; a <= 8; ++a)
                    c.expect(check_identity_chi(BundleContext(g, b), a),
                             "identity failed at (g,b,a) = (" + std::to_string(g) + "," +
                                 std::to_string(b) + "," + std::to_string(a) + ")");
    }));

    items.push_back(run_item(4, "closed-forms-vs-ring-oracle", 2000.0, [&](Check& c) {
        for (long g = 0; g <= 4; ++g)
            for (long b = -8; b <= 8; ++b)
                for (long a = -8; a <= 8; ++a) {
                    BundleContext ctx(g, b);
                    BundleInvariants inv = bundle_invariants(ctx, a);
                    DivisorClass H = DivisorClass::hyperplane(ctx, a);
                    DivisorClass K = DivisorClass::canonical(ctx);
                    DivisorClass KH = K + H;
                    std::string at = " at (g,b,a) = (" + std::to_string(g) + "," +
                                     std::to_string(b) + "," + std::to_string(a) + ")";
                    c.expect(inv.H_cubed == triple_product(H, H, H), "H^3 mismatch" + at);
                    c.expect(inv.K_S_squared == triple_product(KH, KH, H), "K_S^2 mismatch" + at);
                    Rational c2H = Rational(2) * Rational(8 * (1 - g) + b) + Rational(3 * a);
                    Rational chi = (Rational(2) * triple_product(H, H, H) -
                                    Rational(3) * triple_product(K, H, H) +
                                    triple_product(K, K, H) + c2H) /
                                       Rational(12) +
                                   Rational(1 - g);
                    c.expect(inv.chi_H == chi, "chi mismatch" + at);
                }
    }));

    items.push_back(run_item(5, "c2-splitting-oracle", 0.0, [&](Check& c) {
        // On P2 x P1 the tangent bundle splits, so c2 = 3*L^2 + 6*L*F; pair
        // it with H = 2L + aF using the product rules above.
        for (long a = 1; a <= 10; ++a) {
            long c2_dot_H = 3 * p2p1_triple({1, 0}, {1, 0}, {2, a}) +
                            6 * p2p1_triple({1, 0}, {0, 1}, {2, a});
            c.expect(c2_dot_H == 3 * a + 12, "splitting value != 3a+12 at a = " + std::to_string(a));
            BundleInvariants inv = bundle_invariants(BundleContext(0, -2), a);
            c.expect(inv.c2_dot_H == Rational(c2_dot_H),
                     "c2.H mismatch at a = " + std::to_string(a));
        }
    }));

    items.push_back(run_item(6, "determinant-fiber-count", 5000.0, [&](Check& c) {
        for (long a = 1; a <= 3; ++a) {
            int direct = 0;
            for (std::uint32_t seed = 1; seed <= 20; ++seed) {
                bool good = false;
                try {
                    FiberReport r = count_degenerate_fibers(SectionCoefficients::random(a, seed));
                    good = r.squarefree && r.distinct_roots == 3 * a;
                } catch (const std::domain_error&) {
                    good = false;
                }
                if (good) {
                    ++direct;
                } else {
                    GenericCount gc = count_with_redraw(a, seed);
                    c.expect(gc.report.squarefree && gc.report.distinct_roots == 3 * a,
                             "redraw failed at a = " + std::to_string(a) + ", seed " +
                                 std::to_string(seed));
                }
            }
            c.expect(direct >= 19, "only " + std::to_string(direct) +
                                       "/20 generic draws at a = " + std::to_string(a));
        }
        // engineered non-generic instance: M = diag(y0, y0, y0+y1)
        SectionCoefficients bad(1);
        bad.set(0, 0, 1, Rational(1));
        bad.set(1, 1, 1, Rational(1));
        bad.set(2, 2, 0, Rational(1));
        bad.set(2, 2, 1, Rational(1));
        FiberReport r = count_degenerate_fibers(bad);
        c.expect(r.distinct_roots == 2 && !r.squarefree && !r.matches_expected,
                 "engineered instance did not give 2 roots");
    }));

    items.push_back(run_item(7, "classifier-golden-and-grid", 1000.0, [&](Check& c) {
        HypothesisFlags gg_big{true, true, false, false, false};
        HypothesisFlags gg_big_term{true, true, false, false, true};
        HypothesisFlags smooth_va{false, false, true, true, false};

        auto fired = [](const Verdict& v, const char* id) {
            for (const auto& f : v.fired_rules)
                if (f.id == id)
                    return true;
            return false;
        };

        Verdict v1 = classify(PolarizedPair(3, 27, 19, gg_big));
        c.expect(v1.outcome == Outcome::ExceptionalP3Cubic && v1.fired_rules.size() == 1 &&
                     fired(v1, "T1x"),
                 "(3,27,19) not exceptional via T1x alone");
        Verdict v2 = classify(PolarizedPair(3, 12, 11, gg_big_term));
        c.expect(v2.outcome == Outcome::DegreeOne && v2.fired_rules.size() == 1 &&
                     fired(v2, "EB"),
                 "(3,12,11) not EB alone");
        Verdict v3 = classify(PolarizedPair(3, 24, 17, gg_big));
        c.expect(v3.outcome == Outcome::BigUniruledSystemOnly && v3.fired_rules.empty() &&
                     v3.clifford_bound == Rational(-8),
                 "(3,24,17) not big-uniruled with bound -8");
        Verdict v4 = classify(PolarizedPair(5, 9, 16, gg_big));
        c.expect(v4.outcome == Outcome::DegreeOne && v4.fired_rules.size() == 1 &&
                     fired(v4, "C12"),
                 "(5,9,16) not C12 alone");
        Verdict v5 = classify(PolarizedPair(3, 11, 12, smooth_va));
        c.expect(v5.outcome == Outcome::DegreeOne && v5.fired_rules.size() == 1 &&
                     fired(v5, "HB"),
                 "(3,11,12) not HB alone");

        const HypothesisFlags combos[] = {gg_big, gg_big_term, smooth_va,
                                          {true, true, true, true, false},
                                          {true, true, true, true, true}};
        for (long d = 1; d <= 60; ++d)
            for (long n = 4; n <= 30; ++n) {
                bool equiv_lhs = Rational(d) < Rational(2) * (Rational(n) - Rational(3)) - Rational(4);
                bool equiv_rhs = delta_genus(3, Rational(d), Rational(n)) <
                                 Rational(n) - Rational(3) - Rational(5);
                c.expect(equiv_lhs == equiv_rhs, "delta-genus equivalence failed at (d,n) = (" +
                                                     std::to_string(d) + "," + std::to_string(n) +
                                                     ")");
                for (const auto& flags : combos) {
                    Verdict v = classify(PolarizedPair(3, d, n, flags));
                    if (v.outcome == Outcome::ExceptionalP3Cubic)
                        c.expect(d == 27 && n == 19, "spurious exceptional verdict");
                    if (v.outcome == Outcome::DegreeOne)
                        c.expect(!v.fired_rules.empty(), "DegreeOne without a fired rule");
                }
            }
    }));

    items.push_back(run_item(8, "ledger-checks", 0.0, [&](Check& c) {
        for (const auto& r : table) {
            Rational lhs = corner_ledger(r.rho, r.K_squared, 0);
            Rational rhs = Rational(r.d) - Rational(2) * Rational(r.n) + Rational(2);
            c.expect(lhs == rhs, std::string("corner ledger mismatch in row (") + r.label + ")");
        }
        for (long a = 1; a <= 10; ++a) {
            SharpInequality s = sharp_inequality_check(Rational(2, 3), Rational(12 * a),
                                                       Rational(-8), Rational(8 - 3 * a), 0);
            c.expect(s.holds && s.lhs == Rational(0) && s.rhs == Rational(0),
                     "sharp inequality not tight at a = " + std::to_string(a));
        }
    }));

    return items;
}

bool all_passed(const std::vector<SelftestItem>& items) {
    for (const auto& it : items)
        if (!it.passed)
            return false;
    return true;
}

void print_selftest(std::ostream& os, const std::vector<SelftestItem>& items, bool color) {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    double total = 0.0;
    for (const auto& it : items) {
        total += it.millis;
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%.1f", it.millis);
        os << (it.passed ? green : red) << (it.passed ? "PASS" : "FAIL") << reset << "  " << it.id
           << ". " << it.name << " (" << ms << " ms)";
        if (!it.detail.empty())
            os << ": " << it.detail;
        os << "\n";
    }
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.1f", total);
    os << "total: " << items.size() << " items in " << ms << " ms\n";
}

} // namespace unilines
