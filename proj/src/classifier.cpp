#include "unilines/classifier.hpp"

#include <stdexcept>

namespace unilines {

PolarizedPair::PolarizedPair(int dim_, long d_, long n_, HypothesisFlags flags_)
    : dim(dim_), d(d_), n(n_), flags(flags_) {
    if (dim < 2)
        throw std::invalid_argument("dim must be at least 2");
    if (d < 1 || n < 1)
        throw std::invalid_argument("d and n must be positive");
}

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::DegreeOne: return "DegreeOne";
    case Outcome::ExceptionalP3Cubic: return "ExceptionalP3Cubic";
    case Outcome::BigUniruledSystemOnly: return "BigUniruledSystemOnly";
    case Outcome::NoConclusion: return "NoConclusion";
    }
    return "?";
}

Verdict classify(const PolarizedPair& p) {
    if (p.dim < 3)
        throw std::invalid_argument("surface case out of scope");
    const bool gg_big = p.flags.globally_generated && p.flags.big;
    const bool smooth_va = p.flags.smooth && p.flags.very_ample;
    if (!gg_big && !smooth_va)
        throw std::invalid_argument("no applicable hypotheses");

    const Rational d(p.d);
    const Rational n(p.n);
    Verdict v;
    bool degree_one = false;
    bool exceptional = false;

    // T1 / T1x
    if (p.dim == 3 && gg_big && d < Rational(2) * n - Rational(10)) {
        std::string ineq =
            "d < 2n-10 (" + d.str() + " < " + (Rational(2) * n - Rational(10)).str() + ")";
        if (p.d == 27 && p.n == 19) {
            exceptional = true;
            v.fired_rules.push_back(
                {"T1x", ineq + ", (d,n) = (27,19): possible sharp-minimal model (P3, O(3))"});
        } else {
            degree_one = true;
            v.fired_rules.push_back({"T1", ineq});
        }
    }

    // C12
    if (p.dim >= 4 && gg_big) {
        Rational bound = Rational(2) * (n - Rational(p.dim)) - Rational(4);
        if (d < bound) {
            degree_one = true;
            v.fired_rules.push_back(
                {"C12", "d < 2(n-k)-4 (" + d.str() + " < " + bound.str() + ")"});
        }
    }

    // EB
    if (p.dim == 3 && gg_big && p.n >= 4) {
        Rational bound = (Rational(4) * n - Rational(4)) / Rational(3);
        bool excluded = (p.d == p.n - 1 && p.n <= 9) || (p.d == p.n - 2 && p.n <= 6);
        if (!p.flags.terminal_q_factorial)
            excluded = excluded || (p.d == p.n && 5 <= p.n && p.n <= 8);
        if (d < bound && !excluded) {
            degree_one = true;
            v.fired_rules.push_back(
                {"EB", "d < (4n-4)/3 (" + d.str() + " < " + bound.str() + ")"});
        }
    }

    // HB
    if (p.dim == 3 && smooth_va) {
        if (p.n >= 12) {
            Rational bound = Rational(3) * (n - Rational(4)) / Rational(2);
            if (d < bound) {
                degree_one = true;
                v.fired_rules.push_back(
                    {"HB", "n >= 12 and d < 3(n-4)/2 (" + d.str() + " < " + bound.str() + ")"});
            }
        } else if (p.n >= 7) {
            Rational bound = Rational(4) * (n - Rational(3)) / Rational(3);
            if (d < bound) {
                degree_one = true;
                v.fired_rules.push_back(
                    {"HB",
                     "7 <= n <= 11 and d < 4(n-3)/3 (" + d.str() + " < " + bound.str() + ")"});
            }
        }
    }

    if (p.dim == 3 && d < Rational(2) * n - Rational(4))
        v.clifford_bound = d - Rational(2) * n + Rational(2);

    if (degree_one)
        v.outcome = Outcome::DegreeOne;
    else if (exceptional)
        v.outcome = Outcome::ExceptionalP3Cubic;
    else if (v.clifford_bound.has_value())
        v.outcome = Outcome::BigUniruledSystemOnly;
    else
        v.outcome = Outcome::NoConclusion;
    return v;
}

Rational delta_genus(int dim, const Rational& d, const Rational& n) {
    return d + Rational(dim) - n - Rational(1);
}

SharpInequality sharp_inequality_check(const Rational& rho, const Rational& D_sq,
                                       const Rational& D_dot_K, const Rational& K_sq, long l) {
    if (!(Rational(1, 3) <= rho && rho < Rational(1)))
        throw std::domain_error("hypothesis violated");
    if (l < 0)
        throw std::invalid_argument("l must be non-negative");
    Rational c = rho / (Rational(1) - rho);
    SharpInequality s;
    s.lhs = D_sq + Rational(2) * c * D_dot_K + c * c * K_sq;
    s.rhs = -Rational(l) * c * c;
    s.holds = s.lhs >= s.rhs;
    return s;
}

} // namespace unilines
