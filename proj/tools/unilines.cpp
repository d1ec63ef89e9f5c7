#include "unilines/bundle.hpp"
#include "unilines/classifier.hpp"
#include "unilines/fano_table.hpp"
#include "unilines/json_out.hpp"
#include "unilines/selftest.hpp"
#include "unilines/veronese.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <unistd.h>

namespace {

using namespace unilines;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(1); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_classify(int dim, long d, long n, bool smooth, bool very_ample, bool terminal, bool no_gg,
                 bool no_big, bool json) {
    HypothesisFlags flags;
    flags.globally_generated = !no_gg;
    flags.big = !no_big;
    flags.smooth = smooth;
    flags.very_ample = very_ample;
    flags.terminal_q_factorial = terminal;
    PolarizedPair pair(dim, d, n, flags);
    Verdict v = classify(pair);
    if (json) {
        emit(classify_json(pair, v));
        return 0;
    }
    std::cout << "outcome: " << outcome_name(v.outcome) << "\n";
    for (const auto& r : v.fired_rules)
        std::cout << "rule " << r.id << ": " << r.detail << "\n";
    if (v.clifford_bound.has_value())
        std::cout << "clifford bound (d-2n+2): " << v.clifford_bound->str() << "\n";
    std::cout << "delta genus: " << delta_genus(dim, Rational(d), Rational(n)).str() << "\n";
    if (flags.very_ample &&
        (v.outcome == Outcome::DegreeOne || v.outcome == Outcome::ExceptionalP3Cubic))
        std::cout << "note: very ample polarization, degree-one covering curves are lines in the"
                     " embedding\n";
    return 0;
}

int run_fano(bool verify, const std::string& row_label, const std::string& csv_path, bool json) {
    if (verify) {
        TableCheck check = verify_table();
        if (json) {
            emit(fano_verify_json(check));
        } else {
            const char* green = use_color() ? "\033[32m" : "";
            const char* red = use_color() ? "\033[31m" : "";
            const char* reset = use_color() ? "\033[0m" : "";
            std::cout << (check.ok() ? green : red)
                      << (check.rows_checked - check.mismatches.size()) << "/"
                      << check.rows_checked << " rows verified" << reset << "\n";
            for (const auto& m : check.mismatches)
                std::cout << "mismatch: " << m << "\n";
        }
        return check.ok() ? 0 : 2;
    }
    if (!row_label.empty()) {
        if (row_label.size() != 1)
            throw std::invalid_argument("row label must be a single letter a-t");
        const FanoRow* row = find_row(row_label[0]);
        if (row == nullptr)
            throw std::invalid_argument("unknown row label '" + row_label + "'");
        if (json) {
            emit(fano_row_json(*row));
        } else {
            std::cout << "row (" << row->label << "): " << row->ambient << ", section "
                      << row->section << "\n"
                      << "rho = " << row->rho.str() << ", -rho/(rho-1) = " << row->ratio.str()
                      << ", K^2 = " << row->K_squared << ", d = " << row->d << ", n = " << row->n
                      << "\n";
            auto [d, n] = derive_d_n(row->rho, row->K_squared);
            std::cout << "derived: d = " << d.str() << ", n = " << n.str() << "\n";
        }
        return 0;
    }
    if (!csv_path.empty()) {
        std::string csv = fano_table_csv();
        if (csv_path == "-") {
            std::cout << csv;
        } else {
            std::ofstream out(csv_path);
            if (!out)
                throw std::invalid_argument("cannot open '" + csv_path + "' for writing");
            out << csv;
            std::cout << "wrote " << fano_table().size() << " rows to " << csv_path << "\n";
        }
        return 0;
    }
    // default: the whole catalog
    std::cout << "label  rho    ratio  K^2  d   n   ambient / section\n";
    for (const auto& r : fano_table()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%c)    %-6s %-6s %-4ld %-3ld %-3ld ", r.label,
                      r.rho.str().c_str(), r.ratio.str().c_str(), r.K_squared, r.d, r.n);
        std::cout << buf << r.ambient << " / " << r.section << "\n";
    }
    return 0;
}

int run_bundle(long genus, long twist, long a, bool json) {
    BundleContext ctx(genus, twist);
    BundleInvariants inv = bundle_invariants(ctx, a);
    bool identity_ok = check_identity_chi(ctx, a);
    std::optional<VeroneseBoundsReport> bounds;
    if (inv.H_cubed.sign() > 0 && inv.n_expected.sign() >= 0)
        bounds = check_veronese_bounds(inv.H_cubed, inv.n_expected);
    if (json) {
        emit(bundle_json(ctx, a, inv, identity_ok, bounds));
        return 0;
    }
    std::cout << "P(E) over a genus-" << genus << " curve, K_X = " << twist << "V - 3G, H = " << a
              << "V + 2G\n"
              << "G^3 = " << ctx.G_cubed() << "\n"
              << "H^3 = " << inv.H_cubed.str() << "\n"
              << "k (two-line fibers of a general section) = " << inv.k_degenerate.str() << "\n"
              << "K_S^2 = " << inv.K_S_squared.str() << "\n"
              << "c2.H = " << inv.c2_dot_H.str() << "\n"
              << "chi(H) = " << inv.chi_H.str() << "\n"
              << "n = chi(H) - 1 = " << inv.n_expected.str() << " (expected, assumes vanishing)\n"
              << "identity H^3 = 2chi(H) - 12(1-g): " << (identity_ok ? "holds" : "FAILS") << "\n";
    if (bounds.has_value()) {
        std::cout << "bounds at (d, n) = (" << bounds->d.str() << ", " << bounds->n.str()
                  << "): d >= 2n-10 " << (bounds->bound_d_ok ? "holds" : "FAILS")
                  << (bounds->bound_d_equal ? " with equality" : "") << "; k = d/4 = "
                  << bounds->k_implied.str() << " vs (n-5)/2 = " << bounds->k_lower_bound.str()
                  << (bounds->k_equal ? " (equality)" : "") << "\n";
    } else {
        std::cout << "bounds: skipped (H^3 <= 0, H not big)\n";
    }
    return 0;
}

int run_veronese(long a, std::uint32_t seed, bool json) {
    GenericCount gc = count_with_redraw(a, seed, &std::cerr);
    if (json) {
        emit(veronese_json(gc, a));
        return 0;
    }
    const FiberReport& r = gc.report;
    std::cout << "a = " << a << ", seed " << gc.seed_used << (gc.redrawn ? " (after redraw)" : "")
              << "\n"
              << "det degree " << r.det_degree << ", distinct roots " << r.distinct_roots
              << " (expected 3a = " << r.expected << "), "
              << (r.squarefree ? "squarefree" : "NOT squarefree") << "\n"
              << "k from invariants = " << r.k_from_liscio << ", n = " << r.n << ", k = (n-5)/2 "
              << (r.prop_vfs_equality ? "holds" : "FAILS") << "\n";
    return 0;
}

int run_sweep(long a_max, bool json) {
    std::vector<SweepRow> rows = sharpness_sweep(a_max);
    if (json) {
        emit(sweep_json(rows));
        return 0;
    }
    std::cout << "a    d=12a  n=6a+5  2n-10  k=3a  (n-5)/2\n";
    for (const auto& r : rows) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%-4ld %-6ld %-7ld %-6ld %-5ld %ld", r.a, r.d, r.n,
                      r.two_n_minus_10, r.k, r.k_lower_bound);
        std::cout << buf << "\n";
    }
    std::cout << "d = 2n-10 and k = (n-5)/2 hold for every row\n";
    return 0;
}

int run_selftest_cmd() {
    std::vector<SelftestItem> items = run_selftest();
    print_selftest(std::cout, items, use_color());
    return all_passed(items) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and degree-one uniruledness verdicts for polarized varieties"};
    app.require_subcommand(1);

    auto* classify_cmd =
        app.add_subcommand("classify", "apply the degree-one decision rules to (dim, d, n)");
    int dim = 0;
    long degree = 0, sections = 0;
    bool smooth = false, very_ample = false, terminal = false;
    bool no_gg = false, no_big = false, classify_json_flag = false;
    classify_cmd->add_option("--dim", dim, "dimension of X (>= 3)")->required();
    classify_cmd->add_option("--degree", degree, "d = H^dim")->required();
    classify_cmd->add_option("--sections", sections, "n = h0(H) - 1")->required();
    classify_cmd->add_flag("--smooth", smooth, "X is smooth");
    classify_cmd->add_flag("--very-ample", very_ample, "H is very ample");
    classify_cmd->add_flag("--terminal", terminal, "X is terminal Q-factorial");
    classify_cmd->add_flag("--no-globally-generated", no_gg,
                           "drop the globally-generated hypothesis (default: assumed)");
    classify_cmd->add_flag("--no-big", no_big, "drop the bigness hypothesis (default: assumed)");
    classify_cmd->add_flag("--json", classify_json_flag, "emit one JSON object");

    auto* fano_cmd = app.add_subcommand("fano-table", "the embedded Q-Fano threefold catalog");
    bool fano_verify = false, fano_json_flag = false;
    std::string fano_row, fano_csv;
    fano_cmd->add_flag("--verify", fano_verify, "recompute every row and compare");
    fano_cmd->add_option("--row", fano_row, "print one row by its letter a-t");
    fano_cmd->add_option("--csv", fano_csv, "export as CSV to a path ('-' for stdout)");
    fano_cmd->add_flag("--json", fano_json_flag, "emit one JSON object");

    auto* bundle_cmd =
        app.add_subcommand("bundle", "invariants of a P2-bundle over a curve, H = aV + 2G");
    long genus = 0, twist = 0, bundle_a = 0;
    bool bundle_json_flag = false;
    bundle_cmd->add_option("--genus,-g", genus, "genus of the base curve")->required();
    bundle_cmd->add_option("--twist,-b", twist, "twist b in K_X = bV - 3G")->required();
    bundle_cmd->add_option("--a,-a", bundle_a, "coefficient a in H = aV + 2G")->required();
    bundle_cmd->add_flag("--json", bundle_json_flag, "emit one JSON object");

    auto* veronese_cmd = app.add_subcommand(
        "veronese", "degenerate-fiber count of a random hyperplane section of P2 x P1");
    long veronese_a = 0, sweep_max = 0;
    std::uint32_t seed = 42;
    bool veronese_json_flag = false;
    auto* a_opt = veronese_cmd->add_option("--a", veronese_a, "degree a of the P1 factor");
    veronese_cmd->add_option("--seed", seed, "random seed (default 42)");
    auto* sweep_opt =
        veronese_cmd->add_option("--sweep", sweep_max, "emit the sharpness family for a = 1..N");
    veronese_cmd->add_flag("--json", veronese_json_flag, "emit one JSON object");
    a_opt->excludes(sweep_opt);

    auto* selftest_cmd =
        app.add_subcommand("selftest", "run the full verification suite (exit 0 iff all pass)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(classify_cmd))
            return run_classify(dim, degree, sections, smooth, very_ample, terminal, no_gg, no_big,
                                classify_json_flag);
        if (app.got_subcommand(fano_cmd))
            return run_fano(fano_verify, fano_row, fano_csv, fano_json_flag);
        if (app.got_subcommand(bundle_cmd))
            return run_bundle(genus, twist, bundle_a, bundle_json_flag);
        if (app.got_subcommand(veronese_cmd)) {
            if (sweep_opt->count() > 0)
                return run_sweep(sweep_max, veronese_json_flag);
            if (a_opt->count() == 0)
                throw std::invalid_argument("veronese requires --a or --sweep");
            return run_veronese(veronese_a, seed, veronese_json_flag);
        }
        if (app.got_subcommand(selftest_cmd))
            return run_selftest_cmd();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
