#include "unilines/veronese.hpp"

#include "unilines/bundle.hpp"

#include <random>
#include <stdexcept>

namespace unilines {

namespace {

// (i,j) with i <= j, ordered (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
constexpr int kPairIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

long to_long(const Rational& r) {
    if (!r.is_integer())
        throw std::logic_error("expected integral value");
    return r.numerator().get_si();
}

} // namespace

SectionCoefficients::SectionCoefficients(long a) : a_(a) {
    if (a < 1)
        throw std::invalid_argument("a must be positive");
    l_.assign(6 * static_cast<size_t>(a + 1), Rational(0));
}

SectionCoefficients SectionCoefficients::random(long a, std::uint32_t seed) {
    SectionCoefficients c(a);
    std::mt19937 rng(seed);
    // rng() % 199 - 99 rather than a distribution: the mt19937 stream is
    // pinned by the standard, distributions are not
    for (auto& v : c.l_)
        v = Rational(static_cast<long>(rng() % 199u) - 99);
    return c;
}

size_t SectionCoefficients::index(int i, int j, long k) const {
    if (i < 0 || j < 0 || i > 2 || j > 2 || k < 0 || k > a_)
        throw std::out_of_range("coefficient index out of range");
    if (i > j)
        std::swap(i, j);
    return static_cast<size_t>(kPairIndex[i][j]) * static_cast<size_t>(a_ + 1) +
           static_cast<size_t>(k);
}

const Rational& SectionCoefficients::l(int i, int j, long k) const { return l_[index(i, j, k)]; }

void SectionCoefficients::set(int i, int j, long k, Rational value) {
    l_[index(i, j, k)] = std::move(value);
}

BinaryForm SectionCoefficients::pair_form(int i, int j) const {
    // coefficient of y0^k y1^(a-k) sits at y1-power a-k
    std::vector<Rational> coeffs(static_cast<size_t>(a_) + 1);
    for (long k = 0; k <= a_; ++k)
        coeffs[static_cast<size_t>(a_ - k)] = l(i, j, k);
    return BinaryForm(static_cast<int>(a_), std::move(coeffs));
}

Rational SectionCoefficients::eval(const Rational& x0, const Rational& x1, const Rational& x2,
                                   const Rational& y0, const Rational& y1) const {
    const Rational x[3] = {x0, x1, x2};
    Rational acc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            acc += x[i] * x[j] * pair_form(i, j).eval(y0, y1);
    return acc;
}

SymMatrix3 build_matrix(const SectionCoefficients& c) {
    const Rational half(1, 2);
    SymMatrix3 m({c.pair_form(0, 0), half * c.pair_form(0, 1), half * c.pair_form(0, 2),
                  c.pair_form(1, 1), half * c.pair_form(1, 2), c.pair_form(2, 2)});

    // x.M.x must reproduce the section form; spot-check a few points.
    const long pts[4][5] = {{1, 0, 0, 1, 1}, {0, 1, 1, 1, -2}, {1, 2, 3, 3, 2}, {2, -1, 1, 1, 5}};
    for (const auto& p : pts) {
        const Rational x[3] = {Rational(p[0]), Rational(p[1]), Rational(p[2])};
        Rational y0(p[3]), y1(p[4]);
        Rational quad(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                quad += x[i] * m.at(i, j).eval(y0, y1) * x[j];
        if (!(quad == c.eval(x[0], x[1], x[2], y0, y1)))
            throw std::logic_error("matrix does not reproduce the section form");
    }
    return m;
}

FiberReport count_degenerate_fibers(const SectionCoefficients& c) {
    BinaryForm det = det3(build_matrix(c));
    if (det.is_zero())
        throw std::domain_error("section is everywhere-degenerate (non-generic)");
    RootCount rc = distinct_projective_roots(det);

    FiberReport r;
    r.det_degree = det.degree();
    r.distinct_roots = rc.distinct;
    r.squarefree = rc.squarefree;
    r.expected = 3 * c.a();
    r.matches_expected = r.distinct_roots == r.expected;

    // reconcile with the bundle invariants of P2 x P1 (g = 0, b = -2)
    BundleInvariants inv = bundle_invariants(BundleContext(0, -2), c.a());
    r.k_from_liscio = to_long(inv.k_degenerate);
    r.n = 6 * (c.a() + 1) - 1;
    r.prop_vfs_equality = Rational(r.k_from_liscio) == (Rational(r.n) - Rational(5)) / Rational(2);
    return r;
}

GenericCount count_with_redraw(long a, std::uint32_t seed, std::ostream* log) {
    GenericCount out;
    out.seed_used = seed;
    bool ok = false;
    try {
        out.report = count_degenerate_fibers(SectionCoefficients::random(a, seed));
        ok = out.report.squarefree;
    } catch (const std::domain_error&) {
        ok = false;
    }
    if (!ok) {
        if (log)
            *log << "seed " << seed << " drew a non-squarefree determinant at a = " << a
                 << "; redrawing with seed " << seed + 1 << "\n";
        out.seed_used = seed + 1;
        out.redrawn = true;
        out.report = count_degenerate_fibers(SectionCoefficients::random(a, seed + 1));
    }
    return out;
}

std::vector<SweepRow> sharpness_sweep(long a_max) {
    if (a_max < 1)
        throw std::invalid_argument("a_max must be positive");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(a_max));
    for (long a = 1; a <= a_max; ++a) {
        SweepRow r;
        r.a = a;
        r.d = 12 * a;
        r.n = 6 * a + 5;
        r.two_n_minus_10 = 2 * r.n - 10;
        r.k = 3 * a;
        r.k_lower_bound = (r.n - 5) / 2;
        if (r.d != r.two_n_minus_10 || r.k != r.k_lower_bound)
            throw std::logic_error("sharpness identity failed");
        rows.push_back(r);
    }
    return rows;
}

} // namespace unilines
