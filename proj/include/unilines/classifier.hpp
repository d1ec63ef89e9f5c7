#pragma once

#include "unilines/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unilines {

struct HypothesisFlags {
    bool globally_generated = false;
    bool big = false;
    bool smooth = false;
    bool very_ample = false;
    bool terminal_q_factorial = false;
};

/// Numerical polarized pair: dim = dim X, d = H^dim, n = h0(H) - 1, plus the
/// hypothesis flags that gate the decision rules.
struct PolarizedPair {
    int dim;
    long d;
    long n;
    HypothesisFlags flags;

    PolarizedPair(int dim, long d, long n, HypothesisFlags flags);
};

enum class Outcome {
    DegreeOne,            // uniruled of H-degree one
    ExceptionalP3Cubic,   // (dim,d,n) = (3,27,19); possible sharp-minimal model (P3, O(3))
    BigUniruledSystemOnly, // dim 3, d < 2n - 4: big uniruled system, no degree-one verdict
    NoConclusion
};

const char* outcome_name(Outcome o);

struct FiredRule {
    std::string id;     // T1, T1x, C12, EB, HB
    std::string detail; // the evaluated inequality
};

struct Verdict {
    Outcome outcome = Outcome::NoConclusion;
    std::vector<FiredRule> fired_rules;
    /// d - 2n + 2, set whenever dim = 3 and d < 2n - 4.
    std::optional<Rational> clifford_bound;
};

/// Applies the degree-one decision rules in the fixed order T1, C12, EB, HB.
///   T1  (dim 3, gg+big):  d < 2n-10, except (d,n) = (27,19) which is the
///                         exceptional cubic-P3 dichotomy (rule id T1x);
///   C12 (dim >= 4, gg+big): d < 2(n-dim) - 4;
///   EB  (dim 3, gg+big):  n >= 4 and d < (4n-4)/3, excluding d = n-1 for
///                         n <= 9 and d = n-2 for n <= 6, and additionally
///                         d = n for 5 <= n <= 8 unless terminal_q_factorial;
///   HB  (dim 3, smooth+very ample): n >= 12 and d < 3(n-4)/2, or
///                         7 <= n <= 11 and d < 4(n-3)/3.
/// Throws std::invalid_argument("surface case out of scope") for dim < 3 and
/// std::invalid_argument("no applicable hypotheses") when neither gg+big nor
/// smooth+very ample holds.
Verdict classify(const PolarizedPair& p);

/// Delta(X, H) = d + dim X - n - 1.
Rational delta_genus(int dim, const Rational& d, const Rational& n);

struct SharpInequality {
    Rational lhs; // (D + c*K_S)^2 = D^2 + 2c D.K_S + c^2 K_S^2, c = rho/(1-rho)
    Rational rhs; // -l * c^2
    bool holds;
};

/// Surface-ledger inequality (D + rho/(1-rho) K_S)^2 >= -l (rho/(1-rho))^2,
/// valid for 1/3 <= rho < 1; outside that range throws
/// std::domain_error("hypothesis violated"). l counts contracted curves.
SharpInequality sharp_inequality_check(const Rational& rho, const Rational& D_sq,
                                       const Rational& D_dot_K, const Rational& K_sq, long l);

} // namespace unilines
