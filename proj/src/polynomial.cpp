#include "unilines/polynomial.hpp"

#include <stdexcept>

namespace unilines {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero())
        p.c_.push_back(std::move(c));
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (is_zero())
        throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * t + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i)
        d.push_back(Rational(static_cast<long>(i)) * c_[i]);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    return (Rational(1) / c_.back()) * *this;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(s));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + -b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            p[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(p));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> s(p.c_.size());
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = c * p.c_[i];
    return Polynomial(std::move(s));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("division by zero polynomial");
    Polynomial rem = *this;
    std::vector<Rational> quo;
    int dd = divisor.degree();
    if (rem.degree() >= dd)
        quo.resize(static_cast<size_t>(rem.degree() - dd) + 1);
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational q = rem.leading() / divisor.leading();
        quo[static_cast<size_t>(shift)] = q;
        std::vector<Rational> sub(static_cast<size_t>(rem.degree()) + 1);
        for (int i = 0; i <= dd; ++i)
            sub[static_cast<size_t>(i + shift)] = q * divisor.coeff(i);
        rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(quo)), rem};
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += c_[i].sign() < 0 ? " - " : " + ";
        else if (c_[i].sign() < 0)
            s += "-";
        Rational m = c_[i].abs();
        if (!(m == Rational(1)) || i == 0)
            s += m.str();
        if (i > 0) {
            if (!(m == Rational(1)))
                s += "*";
            s += "t";
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

Polynomial poly_gcd(Polynomial f, Polynomial g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd undefined");
    // keep remainders monic so coefficient growth stays tame
    while (!g.is_zero()) {
        Polynomial r = (f % g).monic();
        f = g;
        g = r;
    }
    return f.monic();
}

} // namespace unilines
