#pragma once

#include "unilines/rational.hpp"

namespace unilines {

/// Numerical intersection ring of a three-dimensional projective bundle over
/// a smooth curve of genus g. Num X = Z*G + Z*V with the relations
/// G^2*V = 1, G*V^2 = V^3 = 0 and G^3 = 2(1-g) + b, where b is the twist in
/// K_X = b*V - 3*G.
struct BundleContext {
    long genus;
    long twist;

    BundleContext(long g, long b);
    long G_cubed() const { return 2 * (1 - genus) + twist; }
    friend bool operator==(const BundleContext&, const BundleContext&) = default;
};

/// A numerical class alpha*G + beta*V in a fixed BundleContext.
class DivisorClass {
public:
    DivisorClass(Rational alpha, Rational beta, BundleContext ctx)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), ctx_(ctx) {}

    static DivisorClass G(BundleContext ctx) { return {Rational(1), Rational(0), ctx}; }
    static DivisorClass V(BundleContext ctx) { return {Rational(0), Rational(1), ctx}; }
    /// K_X = b*V - 3*G
    static DivisorClass canonical(BundleContext ctx) {
        return {Rational(-3), Rational(ctx.twist), ctx};
    }
    /// H = a*V + 2*G, the marking class of a Veronese fibration.
    static DivisorClass hyperplane(BundleContext ctx, long a) {
        return {Rational(2), Rational(a), ctx};
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const BundleContext& context() const { return ctx_; }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator*(const Rational& c, const DivisorClass& x) {
        return {c * x.alpha_, c * x.beta_, x.ctx_};
    }

private:
    Rational alpha_, beta_;
    BundleContext ctx_;
};

/// D1*D2*D3 = a1*a2*a3*G^3 + (a1*a2*b3 + a1*b2*a3 + b1*a2*a3), from the ring
/// relations above. Classes from different contexts raise
/// std::invalid_argument("context mismatch").
Rational triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3);

struct BundleInvariants {
    Rational H_cubed;     // 12a + 8b + 16(1-g)
    Rational k_degenerate; // 4(1-g) + 3a + 2b, the count of two-line fibers
    Rational K_S_squared;  // 4(1-g) - 3a - 2b
    Rational c2_dot_H;     // 16(1-g) + 2b + 3a
    Rational chi_H;        // 14(1-g) + 6a + 4b
    Rational n_expected;   // chi_H - 1; "expected" because h0 = chi needs the
                           // vanishing of the higher cohomology. For these
                           // fibrations h1(H) <= 2g, but that is cohomological
                           // input the numerical ring cannot certify, so the
                           // field is reported as expected rather than asserted.
};

/// Closed-form invariants of (X, H) with H = a*V + 2*G. Every closed form is
/// recomputed internally from triple products and the Riemann-Roch assembly
/// chi = (2H^3 - 3K.H^2 + K^2.H + c2.H)/12 + (1-g); a mismatch raises
/// std::logic_error("formula inconsistency").
BundleInvariants bundle_invariants(const BundleContext& ctx, long a);

/// H^3 = 2*chi(H) - 12(1-g); holds identically.
bool check_identity_chi(const BundleContext& ctx, long a);

struct VeroneseBoundsReport {
    Rational d, n;
    bool bound_d_ok;       // d >= 2n - 10
    bool bound_d_equal;    // d == 2n - 10
    Rational k_implied;    // d / 4
    Rational k_lower_bound; // (n - 5) / 2
    bool k_bound_ok;       // k_implied >= k_lower_bound
    bool k_equal;          // k_implied == k_lower_bound
};

/// Degree and fiber-count bounds for a terminal Veronese fibration with
/// invariants (d, n). Throws std::domain_error("H not big") when d <= 0.
VeroneseBoundsReport check_veronese_bounds(const Rational& d, const Rational& n);

} // namespace unilines
