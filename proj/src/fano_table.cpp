#include "unilines/fano_table.hpp"

#include <stdexcept>

namespace unilines {

namespace {

std::vector<FanoRow> build_table() {
    auto row = [](char label, const char* ambient, const char* section, long rho_num,
                  long rho_den, long ratio_num, long ratio_den, long K2, long d, long n) {
        return FanoRow{label,
                       ambient,
                       section,
                       Rational(rho_num, rho_den),
                       Rational(ratio_num, ratio_den),
                       K2,
                       d,
                       n};
    };
    return {
        row('a', "P(1,1,2,3)", "H6 ⊂ X", 6, 7, 6, 1, 1, 36, 22),
        row('b', "X6 ⊂ P(1,1,2,3,3)", "X6 ∩ {x4=0}", 3, 4, 3, 1, 1, 9, 7),
        row('c', "X6 ⊂ P(1,1,2,3,4)", "X6 ∩ {x4=0}", 4, 5, 4, 1, 1, 16, 11),
        row('d', "X6 ⊂ P(1,1,2,3,5)", "X6 ∩ {x4=0}", 5, 6, 5, 1, 1, 25, 16),
        row('e', "X6 ⊂ P(1,1,2,2,3)", "X6 ∩ {x3=0}", 2, 3, 2, 1, 1, 4, 4),
        row('f', "X6 ⊂ P(1,1,1,2,3)", "X6 ∩ {x0=0}", 1, 2, 1, 1, 1, 1, 2),
        row('g', "P(1,1,1,2)", "H4 ⊂ X", 4, 5, 4, 1, 2, 32, 21),
        row('h', "X4 ⊂ P(1,1,1,2,2)", "X4 ∩ {x4=0}", 2, 3, 2, 1, 2, 8, 7),
        row('i', "X4 ⊂ P(1,1,1,2,3)", "X4 ∩ {x4=0}", 3, 4, 3, 1, 2, 18, 13),
        row('j', "X4 ⊂ P(1,1,1,1,2)", "X4 ∩ {x0=0}", 1, 2, 1, 1, 2, 2, 3),
        row('k', "P3", "H3 ⊂ X", 3, 4, 3, 1, 3, 27, 19),
        row('l', "X3 ⊂ P(1,1,1,1,2)", "X3 ∩ {x4=0}", 2, 3, 2, 1, 3, 12, 10),
        row('m', "X3 ⊂ P4", "X3 ∩ {x0=0}", 1, 2, 1, 1, 3, 3, 4),
        row('n', "X2 ⊂ P4", "H2,2 ⊂ X2", 2, 3, 2, 1, 4, 16, 13),
        row('o', "X2,2 ⊂ P5", "X2,2 ∩ {x0=0}", 1, 2, 1, 1, 4, 4, 5),
        row('p', "P6 ∩ G(1,4)", "X ∩ {x0=0}", 1, 2, 1, 1, 5, 5, 6),
        row('q', "X2 ⊂ P4", "X2 ∩ {x0=0} ≅ P1×P1", 1, 3, 1, 2, 8, 2, 4),
        row('r', "P3", "P1×P1 ≅ H2 ⊂ X", 1, 2, 1, 1, 8, 8, 9),
        row('s', "P3", "{x0=0} ≅ P2 ⊂ X", 1, 4, 1, 3, 9, 1, 3),
        row('t', "P(1,1,1,2)", "{x3=0} ≅ P2 ⊂ X", 2, 5, 2, 3, 9, 4, 6),
    };
}

} // namespace

const std::vector<FanoRow>& fano_table() {
    static const std::vector<FanoRow> table = build_table();
    return table;
}

const FanoRow* find_row(char label) {
    for (const auto& r : fano_table())
        if (r.label == label)
            return &r;
    return nullptr;
}

std::pair<Rational, Rational> derive_d_n(const Rational& rho, long K_squared) {
    if (!(Rational(0) < rho && rho < Rational(1)))
        throw std::domain_error("index out of range");
    Rational c = rho / (rho - Rational(1));
    Rational d = c * c * Rational(K_squared);
    Rational n = rho * Rational(K_squared) / (Rational(2) * (rho - Rational(1)) * (rho - Rational(1))) +
                 Rational(1);
    return {d, n};
}

TableCheck verify_rows(std::span<const FanoRow> rows) {
    TableCheck check;
    for (const auto& r : rows) {
        ++check.rows_checked;
        auto [d, n] = derive_d_n(r.rho, r.K_squared);
        Rational ratio = -r.rho / (r.rho - Rational(1));
        std::string prefix = std::string("row (") + r.label + "): ";
        if (!(d == Rational(r.d)))
            check.mismatches.push_back(prefix + "d stored " + Rational(r.d).str() +
                                       ", derived " + d.str());
        if (!(n == Rational(r.n)))
            check.mismatches.push_back(prefix + "n stored " + Rational(r.n).str() +
                                       ", derived " + n.str());
        if (!(ratio == r.ratio))
            check.mismatches.push_back(prefix + "ratio stored " + r.ratio.str() + ", derived " +
                                       ratio.str());
    }
    return check;
}

TableCheck verify_table() { return verify_rows(fano_table()); }

Rational corner_ledger(const Rational& rho, long K_sharp_squared, long mu_sum) {
    if (!(Rational(0) < rho && rho < Rational(1)))
        throw std::domain_error("index out of range");
    if (mu_sum < 0)
        throw std::invalid_argument("mu_sum must be non-negative");
    return rho / (rho - Rational(1)) * Rational(K_sharp_squared) + Rational(mu_sum);
}

std::string fano_table_csv() {
    std::string csv = "label,ambient,section,rho_num,rho_den,K2,d,n\n";
    for (const auto& r : fano_table()) {
        csv += r.label;
        csv += ",\"" + r.ambient + "\",\"" + r.section + "\",";
        csv += r.rho.numerator().get_str() + "," + r.rho.denominator().get_str() + ",";
        csv += std::to_string(r.K_squared) + "," + std::to_string(r.d) + "," +
               std::to_string(r.n) + "\n";
    }
    return csv;
}

} // namespace unilines
