#include "unilines/binary_form.hpp"

#include <stdexcept>
#include <utility>

namespace unilines {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (degree_ < 0)
        throw std::invalid_argument("negative degree");
    if (c_.size() != static_cast<size_t>(degree_) + 1)
        throw std::invalid_argument("coefficient count must be degree + 1");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Rational>(static_cast<size_t>(degree) + 1));
}

BinaryForm BinaryForm::monomial(int degree, int y1_power, Rational c) {
    if (y1_power < 0 || y1_power > degree)
        throw std::invalid_argument("monomial exponent out of range");
    BinaryForm f = zero(degree);
    f.c_[static_cast<size_t>(y1_power)] = std::move(c);
    return f;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

Rational BinaryForm::eval(const Rational& y0, const Rational& y1) const {
    // powers of y0 descending, y1 ascending
    Rational acc(0);
    Rational p1(1);
    std::vector<Rational> p0(c_.size());
    p0[0] = Rational(1);
    for (size_t i = 1; i < c_.size(); ++i)
        p0[i] = p0[i - 1] * y0;
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * p0[c_.size() - 1 - i] * p1;
        p1 *= y1;
    }
    return acc;
}

Polynomial BinaryForm::dehomogenized() const { return Polynomial(c_); }

bool BinaryForm::divisible_by_y0() const {
    return degree_ > 0 && c_[static_cast<size_t>(degree_)].is_zero() && !is_zero();
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_)
        throw std::invalid_argument("degree mismatch in form addition");
    std::vector<Rational> s(a.c_.size());
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = a.c_[i] + b.c_[i];
    return BinaryForm(a.degree_, std::move(s));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    return a + Rational(-1) * b;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            p[i + j] += a.c_[i] * b.c_[j];
    return BinaryForm(a.degree_ + b.degree_, std::move(p));
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
    std::vector<Rational> s(f.c_.size());
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = c * f.c_[i];
    return BinaryForm(f.degree_, std::move(s));
}

std::string BinaryForm::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += c_[i].sign() < 0 ? " - " : " + ";
        else if (c_[i].sign() < 0)
            s += "-";
        Rational m = c_[i].abs();
        int e0 = degree_ - static_cast<int>(i);
        int e1 = static_cast<int>(i);
        std::vector<std::string> factors;
        if (!(m == Rational(1)) || (e0 == 0 && e1 == 0))
            factors.push_back(m.str());
        if (e0 > 0)
            factors.push_back(e0 == 1 ? "y0" : "y0^" + std::to_string(e0));
        if (e1 > 0)
            factors.push_back(e1 == 1 ? "y1" : "y1^" + std::to_string(e1));
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k)
                s += "*";
            s += factors[k];
        }
    }
    return s;
}

RootCount distinct_projective_roots(const BinaryForm& F) {
    if (F.is_zero())
        throw std::invalid_argument("root count undefined");
    Polynomial f = F.dehomogenized();
    int affine = 0;
    if (f.degree() > 0) {
        Polynomial g = poly_gcd(f, f.derivative());
        affine = (f / g).degree();
    }
    RootCount rc;
    rc.distinct = affine + (F.divisible_by_y0() ? 1 : 0);
    rc.squarefree = rc.distinct == F.degree();
    return rc;
}

SymMatrix3::SymMatrix3(std::array<BinaryForm, 6> upper) : e_(std::move(upper)) {
    for (const auto& f : e_)
        if (f.degree() != e_[0].degree())
            throw std::invalid_argument("non-uniform matrix");
}

const BinaryForm& SymMatrix3::at(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    static constexpr int idx[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
    return e_[static_cast<size_t>(idx[i][j])];
}

BinaryForm det3(const Matrix3& m) {
    int deg = m[0][0].degree();
    for (const auto& row : m)
        for (const auto& f : row)
            if (f.degree() != deg)
                throw std::invalid_argument("non-uniform matrix");
    auto minor = [&](int r1, int r2, int c1, int c2) {
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    return m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
}

BinaryForm det3(const SymMatrix3& m) {
    Matrix3 full = {{{m.at(0, 0), m.at(0, 1), m.at(0, 2)},
                     {m.at(1, 0), m.at(1, 1), m.at(1, 2)},
                     {m.at(2, 0), m.at(2, 1), m.at(2, 2)}}};
    return det3(full);
}

} // namespace unilines
