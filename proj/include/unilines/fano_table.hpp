#pragma once

#include "unilines/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unilines {

/// One row of the Q-Fano threefold catalog: the sharp-minimal-model case in
/// which the general surface section is a del Pezzo surface with canonical
/// self-intersection K_squared and threshold rho.
struct FanoRow {
    char label;          // 'a' .. 't'
    std::string ambient; // description of the threefold
    std::string section; // description of the general surface section
    Rational rho;
    Rational ratio;      // -rho / (rho - 1)
    long K_squared;
    long d;
    long n;
};

/// The embedded 20-row catalog, in label order.
const std::vector<FanoRow>& fano_table();

/// Pointer into fano_table(), or nullptr for an unknown label.
const FanoRow* find_row(char label);

/// d = (rho/(rho-1))^2 * K^2 and n = rho*K^2 / (2(rho-1)^2) + 1.
/// Requires 0 < rho < 1; otherwise std::domain_error("index out of range").
std::pair<Rational, Rational> derive_d_n(const Rational& rho, long K_squared);

struct TableCheck {
    size_t rows_checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Recompute (d, n, ratio) for each row and compare with the stored values.
TableCheck verify_rows(std::span<const FanoRow> rows);
TableCheck verify_table();

/// d - 2n + 2 = rho/(rho-1) * K^2 + sum of the mu coefficients, the ledger
/// identity for sharp-minimal models of catalog type. mu_sum collects the
/// contraction coefficients mu in {0,1}, which are inputs here because they
/// are not derivable from (d, n) alone.
Rational corner_ledger(const Rational& rho, long K_sharp_squared, long mu_sum);

/// CSV export with header label,ambient,section,rho_num,rho_den,K2,d,n.
/// Text fields are double-quoted (they contain commas).
std::string fano_table_csv();

} // namespace unilines
