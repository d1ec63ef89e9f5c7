#include "unilines/bundle.hpp"

#include <stdexcept>

namespace unilines {

BundleContext::BundleContext(long g, long b) : genus(g), twist(b) {
    if (g < 0)
        throw std::invalid_argument("genus must be non-negative");
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (!(x.ctx_ == y.ctx_))
        throw std::invalid_argument("context mismatch");
    return {x.alpha_ + y.alpha_, x.beta_ + y.beta_, x.ctx_};
}

Rational triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3) {
    if (!(d1.context() == d2.context()) || !(d1.context() == d3.context()))
        throw std::invalid_argument("context mismatch");
    const Rational& a1 = d1.alpha();
    const Rational& a2 = d2.alpha();
    const Rational& a3 = d3.alpha();
    Rational ggg = a1 * a2 * a3 * Rational(d1.context().G_cubed());
    Rational ggv = a1 * a2 * d3.beta() + a1 * d2.beta() * a3 + d1.beta() * a2 * a3;
    return ggg + ggv;
}

BundleInvariants bundle_invariants(const BundleContext& ctx, long a) {
    const long g = ctx.genus;
    const long b = ctx.twist;

    BundleInvariants inv;
    inv.H_cubed = Rational(12 * a + 8 * b + 16 * (1 - g));
    inv.k_degenerate = Rational(4 * (1 - g) + 3 * a + 2 * b);
    inv.K_S_squared = Rational(4 * (1 - g) - 3 * a - 2 * b);
    inv.c2_dot_H = Rational(16 * (1 - g) + 2 * b + 3 * a);
    inv.chi_H = Rational(14 * (1 - g) + 6 * a + 4 * b);
    inv.n_expected = inv.chi_H - Rational(1);

    // Cross-check every closed form against the ring itself.
    DivisorClass H = DivisorClass::hyperplane(ctx, a);
    DivisorClass K = DivisorClass::canonical(ctx);
    DivisorClass KH = K + H;

    Rational h3 = triple_product(H, H, H);
    Rational ks2 = triple_product(KH, KH, H);
    // c2.G = 8(1-g) + b and c2.V = 3 come with the ring; c2.H by linearity.
    Rational c2G(8 * (1 - g) + b);
    Rational c2V(3);
    Rational c2H = Rational(2) * c2G + Rational(a) * c2V;
    Rational kh2 = triple_product(K, H, H);
    Rational k2h = triple_product(K, K, H);
    Rational chi =
        (Rational(2) * h3 - Rational(3) * kh2 + k2h + c2H) / Rational(12) + Rational(1 - g);

    bool consistent = inv.H_cubed == h3 && inv.K_S_squared == ks2 && inv.c2_dot_H == c2H &&
                      inv.chi_H == chi && inv.H_cubed == Rational(4) * inv.k_degenerate &&
                      inv.k_degenerate + inv.K_S_squared == Rational(8 * (1 - g));
    if (!consistent)
        throw std::logic_error("formula inconsistency");
    return inv;
}

bool check_identity_chi(const BundleContext& ctx, long a) {
    BundleInvariants inv = bundle_invariants(ctx, a);
    return inv.H_cubed == Rational(2) * inv.chi_H - Rational(12 * (1 - ctx.genus));
}

VeroneseBoundsReport check_veronese_bounds(const Rational& d, const Rational& n) {
    if (d.sign() <= 0)
        throw std::domain_error("H not big");
    if (n.sign() < 0)
        throw std::invalid_argument("n must be non-negative");
    VeroneseBoundsReport r;
    r.d = d;
    r.n = n;
    Rational bound = Rational(2) * n - Rational(10);
    r.bound_d_ok = d >= bound;
    r.bound_d_equal = d == bound;
    r.k_implied = d / Rational(4);
    r.k_lower_bound = (n - Rational(5)) / Rational(2);
    r.k_bound_ok = r.k_implied >= r.k_lower_bound;
    r.k_equal = r.k_implied == r.k_lower_bound;
    return r;
}

} // namespace unilines
