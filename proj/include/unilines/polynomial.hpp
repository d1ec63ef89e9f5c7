#pragma once

#include "unilines/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace unilines {

/// Dense univariate polynomial over Rational. Coefficient i multiplies t^i;
/// the coefficient vector is empty (zero polynomial) or ends in a nonzero entry.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational eval(const Rational& t) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Long division over the rationals: returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }
    Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Monic greatest common divisor by the Euclidean algorithm.
/// Throws std::invalid_argument("gcd undefined") if both inputs are zero.
Polynomial poly_gcd(Polynomial f, Polynomial g);

} // namespace unilines
