#include "unilines/polynomial.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <random>

using unilines::Polynomial;
using unilines::Rational;
using unilines::poly_gcd;

namespace {

Polynomial poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return Polynomial(c);
}

} // namespace

TEST_CASE("gcd of t^2-1 and t-1 is t-1") {
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
}

TEST_CASE("gcd of t^3 and t^2 is t^2") {
    CHECK(poly_gcd(poly({0, 0, 0, 1}), poly({0, 0, 1})) == poly({0, 0, 1}));
}

TEST_CASE("gcd with derivative finds the repeated factor") {
    // f = (t-2)^2 (t+1) = t^3 - 3t^2 + 4, f' = 3t^2 - 6t, gcd = t - 2
    Polynomial f = poly({4, 0, -3, 1});
    CHECK(f == poly({-2, 1}) * poly({-2, 1}) * poly({1, 1}));
    CHECK(poly_gcd(f, f.derivative()) == poly({-2, 1}));
}

TEST_CASE("gcd of two zero polynomials is undefined") {
    CHECK_THROWS_WITH_AS(poly_gcd(Polynomial(), Polynomial()), "gcd undefined",
                         std::invalid_argument);
    // one-sided zero is fine and gives the monic other argument
    CHECK(poly_gcd(poly({0, 0, 2}), Polynomial()) == poly({0, 0, 1}));
}

TEST_CASE("division is exact on products") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = testutil::random_polynomial(rng, 1 + static_cast<int>(rng() % 5));
        Polynomial g = testutil::random_polynomial(rng, 1 + static_cast<int>(rng() % 4));
        Polynomial prod = f * g;
        auto [q, r] = prod.divmod(g);
        CHECK(r.is_zero());
        CHECK(q == f);
    }
}

TEST_CASE("gcd properties on constructed common factors") {
    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        Polynomial h = testutil::random_polynomial(rng, 1 + static_cast<int>(rng() % 3));
        Polynomial u = testutil::random_polynomial(rng, 1 + static_cast<int>(rng() % 3));
        Polynomial v = testutil::random_polynomial(rng, 1 + static_cast<int>(rng() % 3));
        Polynomial g = poly_gcd(h * u, h * v);
        // g divides both inputs and the common divisor h divides g
        CHECK((h * u % g).is_zero());
        CHECK((h * v % g).is_zero());
        CHECK((g % h).is_zero());
        // monic
        CHECK(g.leading() == Rational(1));
    }
}

TEST_CASE("squarefree-part division reconstructs the polynomial") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = testutil::random_polynomial(rng, 2 + static_cast<int>(rng() % 5));
        Polynomial g = poly_gcd(f, f.derivative());
        CHECK(g * (f / g) == f);
    }
}

TEST_CASE("evaluation agrees with explicit horner at sample points") {
    Polynomial f = poly({4, 0, -3, 1});
    CHECK(f.eval(Rational(2)) == Rational(0));
    CHECK(f.eval(Rational(-1)) == Rational(0));
    CHECK(f.eval(Rational(1, 2)) == Rational(4) - Rational(3, 4) + Rational(1, 8));
}
