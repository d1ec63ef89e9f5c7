#pragma once

#include "unilines/binary_form.hpp"
#include "unilines/rational.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace unilines {

/// Coefficients l_ijk (0 <= i <= j <= 2, 0 <= k <= a) of a hyperplane section
/// sum l_ijk x_i x_j y0^k y1^(a-k) of the degree-(2,a) embedding of P2 x P1.
/// Exactly 6(a+1) coefficients.
class SectionCoefficients {
public:
    explicit SectionCoefficients(long a);
    /// Integer coefficients drawn uniformly from [-99, 99], reproducible per seed.
    static SectionCoefficients random(long a, std::uint32_t seed);

    long a() const { return a_; }
    const Rational& l(int i, int j, long k) const;
    void set(int i, int j, long k, Rational value);

    /// sum_k l_ijk y0^k y1^(a-k), the binary form attached to the pair (i, j).
    BinaryForm pair_form(int i, int j) const;
    Rational eval(const Rational& x0, const Rational& x1, const Rational& x2, const Rational& y0,
                  const Rational& y1) const;

private:
    long a_;
    std::vector<Rational> l_;
    size_t index(int i, int j, long k) const;
};

/// The symmetric matrix M with x.M.x equal to the section form: diagonal
/// entries are the pair forms, off-diagonal entries carry a factor 1/2.
/// The reconstruction identity is spot-checked at fixed rational points;
/// a failure raises std::logic_error.
SymMatrix3 build_matrix(const SectionCoefficients& c);

struct FiberReport {
    long det_degree = 0;      // 3a for a nonzero determinant
    long distinct_roots = 0;  // distinct zeros of the determinant on P1
    bool squarefree = false;
    long expected = 0;        // 3a
    bool matches_expected = false;
    long k_from_liscio = 0;   // 3a, from the bundle invariants at (g=0, b=-2)
    long n = 0;               // 6(a+1) - 1
    bool prop_vfs_equality = false; // k == (n-5)/2, the minimal fiber count
};

/// Count degenerate (two-line) fibers of the hyperplane section as the
/// distinct projective zeros of det M. An identically vanishing determinant
/// raises std::domain_error("section is everywhere-degenerate (non-generic)").
FiberReport count_degenerate_fibers(const SectionCoefficients& c);

struct GenericCount {
    FiberReport report;
    std::uint32_t seed_used = 0;
    bool redrawn = false;
};

/// Random draw at the given seed with the redraw rule: a degenerate or
/// non-squarefree draw triggers one automatic redraw with seed+1, logged.
GenericCount count_with_redraw(long a, std::uint32_t seed, std::ostream* log = nullptr);

struct SweepRow {
    long a;
    long d;              // 12a
    long n;              // 6a + 5
    long two_n_minus_10; // equals d
    long k;              // 3a
    long k_lower_bound;  // (n-5)/2, equals k
};

/// The sharpness family for a = 1..a_max: d = 2n-10 and k = (n-5)/2 with
/// equality for every member. An equality failure raises std::logic_error.
std::vector<SweepRow> sharpness_sweep(long a_max);

} // namespace unilines
