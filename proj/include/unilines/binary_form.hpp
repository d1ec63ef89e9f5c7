#pragma once

#include "unilines/polynomial.hpp"
#include "unilines/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace unilines {

/// Homogeneous polynomial of degree N in two variables y0, y1 over Rational.
/// Coefficient i multiplies y0^(N-i) * y1^i. The identically-zero form is
/// representable (all coefficients zero) and reported by is_zero().
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<Rational> coeffs);
    static BinaryForm zero(int degree);
    /// c * y0^(degree - y1_power) * y1^y1_power
    static BinaryForm monomial(int degree, int y1_power, Rational c = Rational(1));

    int degree() const { return degree_; }
    bool is_zero() const;
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    Rational eval(const Rational& y0, const Rational& y1) const;
    /// f(t) = F(1, t), the chart y0 = 1.
    Polynomial dehomogenized() const;
    /// True iff every monomial carries a positive power of y0, i.e. the
    /// form vanishes at [0:1]. False for degree-0 forms.
    bool divisible_by_y0() const;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& f);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    int degree_;
    std::vector<Rational> c_;
};

struct RootCount {
    int distinct = 0;
    bool squarefree = false;
};

/// Number of distinct roots of F on the projective line over an algebraically
/// closed field, counted algebraically: deg(f / gcd(f, f')) for f(t) = F(1, t),
/// plus one for [0:1] when y0 divides F. squarefree <=> count == deg F.
/// Throws std::invalid_argument("root count undefined") on the zero form.
RootCount distinct_projective_roots(const BinaryForm& F);

/// Symmetric 3x3 matrix of binary forms, stored as the upper triangle
/// (0,0),(0,1),(0,2),(1,1),(1,2),(2,2). All six entries share one degree.
class SymMatrix3 {
public:
    explicit SymMatrix3(std::array<BinaryForm, 6> upper);
    int entry_degree() const { return e_[0].degree(); }
    const BinaryForm& at(int i, int j) const;

private:
    std::array<BinaryForm, 6> e_;
};

using Matrix3 = std::array<std::array<BinaryForm, 3>, 3>;

/// Cofactor-expansion determinant. The result has degree exactly 3a for
/// entries of degree a, or is the flagged zero form. Mixed entry degrees
/// raise std::invalid_argument("non-uniform matrix").
BinaryForm det3(const Matrix3& m);
BinaryForm det3(const SymMatrix3& m);

} // namespace unilines
