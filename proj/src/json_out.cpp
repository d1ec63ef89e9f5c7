#include "unilines/json_out.hpp"

namespace unilines {

namespace {

Json flags_json(const HypothesisFlags& f) {
    Json j;
    j["globally_generated"] = f.globally_generated;
    j["big"] = f.big;
    j["smooth"] = f.smooth;
    j["very_ample"] = f.very_ample;
    j["terminal_q_factorial"] = f.terminal_q_factorial;
    return j;
}

} // namespace

Json classify_json(const PolarizedPair& p, const Verdict& v) {
    Json j;
    j["command"] = "classify";
    j["dim"] = p.dim;
    j["degree"] = p.d;
    j["sections"] = p.n;
    j["flags"] = flags_json(p.flags);
    j["outcome"] = outcome_name(v.outcome);
    Json rules = Json::array();
    for (const auto& r : v.fired_rules) {
        Json jr;
        jr["id"] = r.id;
        jr["detail"] = r.detail;
        rules.push_back(jr);
    }
    j["fired_rules"] = rules;
    if (v.clifford_bound.has_value())
        j["clifford_bound"] = v.clifford_bound->str();
    else
        j["clifford_bound"] = nullptr;
    j["delta_genus"] = delta_genus(p.dim, Rational(p.d), Rational(p.n)).str();
    if (p.flags.very_ample &&
        (v.outcome == Outcome::DegreeOne || v.outcome == Outcome::ExceptionalP3Cubic))
        j["note"] = "very ample polarization: degree-one covering curves are lines in the embedding";
    return j;
}

Json bundle_json(const BundleContext& ctx, long a, const BundleInvariants& inv, bool identity_ok,
                 const std::optional<VeroneseBoundsReport>& bounds) {
    Json j;
    j["command"] = "bundle";
    j["genus"] = ctx.genus;
    j["twist"] = ctx.twist;
    j["a"] = a;
    j["G_cubed"] = ctx.G_cubed();
    j["H_cubed"] = inv.H_cubed.str();
    j["k_degenerate"] = inv.k_degenerate.str();
    j["K_S_squared"] = inv.K_S_squared.str();
    j["c2_dot_H"] = inv.c2_dot_H.str();
    j["chi_H"] = inv.chi_H.str();
    j["n_expected"] = inv.n_expected.str();
    j["n_expected_note"] = "expected, assumes vanishing";
    j["chi_identity_ok"] = identity_ok;
    if (bounds.has_value()) {
        Json b;
        b["d"] = bounds->d.str();
        b["n"] = bounds->n.str();
        b["bound_d_ok"] = bounds->bound_d_ok;
        b["bound_d_equal"] = bounds->bound_d_equal;
        b["k_implied"] = bounds->k_implied.str();
        b["k_lower_bound"] = bounds->k_lower_bound.str();
        b["k_bound_ok"] = bounds->k_bound_ok;
        b["k_equal"] = bounds->k_equal;
        j["veronese_bounds"] = b;
    } else {
        j["veronese_bounds"] = nullptr;
    }
    return j;
}

Json fano_row_json(const FanoRow& row) {
    Json j;
    j["label"] = std::string(1, row.label);
    j["ambient"] = row.ambient;
    j["section"] = row.section;
    j["rho"] = row.rho.str();
    j["ratio"] = row.ratio.str();
    j["K_squared"] = row.K_squared;
    j["d"] = row.d;
    j["n"] = row.n;
    auto [d, n] = derive_d_n(row.rho, row.K_squared);
    j["derived_d"] = d.str();
    j["derived_n"] = n.str();
    j["verified"] = d == Rational(row.d) && n == Rational(row.n);
    return j;
}

Json fano_verify_json(const TableCheck& check) {
    Json j;
    j["command"] = "fano-table";
    j["rows_checked"] = check.rows_checked;
    j["rows_verified"] = check.rows_checked - check.mismatches.size();
    j["mismatches"] = check.mismatches;
    j["ok"] = check.ok();
    return j;
}

Json veronese_json(const GenericCount& gc, long a) {
    Json j;
    j["command"] = "veronese";
    j["a"] = a;
    j["seed_used"] = gc.seed_used;
    j["redrawn"] = gc.redrawn;
    j["det_degree"] = gc.report.det_degree;
    j["distinct_roots"] = gc.report.distinct_roots;
    j["squarefree"] = gc.report.squarefree;
    j["expected"] = gc.report.expected;
    j["matches_expected"] = gc.report.matches_expected;
    j["k_from_liscio"] = gc.report.k_from_liscio;
    j["n"] = gc.report.n;
    j["prop_vfs_equality"] = gc.report.prop_vfs_equality;
    return j;
}

Json sweep_json(const std::vector<SweepRow>& rows) {
    Json j;
    j["command"] = "veronese-sweep";
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json jr;
        jr["a"] = r.a;
        jr["d"] = r.d;
        jr["n"] = r.n;
        jr["two_n_minus_10"] = r.two_n_minus_10;
        jr["k"] = r.k;
        jr["k_lower_bound"] = r.k_lower_bound;
        arr.push_back(jr);
    }
    j["rows"] = arr;
    j["all_equalities_hold"] = true;
    return j;
}

} // namespace unilines
