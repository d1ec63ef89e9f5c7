#include "unilines/veronese.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <chrono>
#include <random>
#include <sstream>

using namespace unilines;

TEST_CASE("a single x0^2 y1 term gives a rank-one matrix and zero determinant") {
    SectionCoefficients c(1);
    c.set(0, 0, 0, Rational(1)); // l_000: x0^2 y1 (k = 0 carries y1^(a-k) = y1)
    SymMatrix3 m = build_matrix(c);
    CHECK(m.at(0, 0) == BinaryForm::monomial(1, 1));
    CHECK(m.at(1, 1).is_zero());
    CHECK(det3(m).is_zero());
    CHECK_THROWS_WITH_AS(count_degenerate_fibers(c),
                         "section is everywhere-degenerate (non-generic)", std::domain_error);
}

TEST_CASE("diagonal section diag(y0, y0, y1) has determinant y0^2 y1") {
    SectionCoefficients c(1);
    c.set(0, 0, 1, Rational(1));
    c.set(1, 1, 1, Rational(1));
    c.set(2, 2, 0, Rational(1));
    SymMatrix3 m = build_matrix(c);
    CHECK(m.at(0, 0) == BinaryForm::monomial(1, 0));
    CHECK(m.at(2, 2) == BinaryForm::monomial(1, 1));
    BinaryForm d = det3(m);
    CHECK(d == BinaryForm::monomial(3, 1)); // y0^2 y1
    FiberReport r = count_degenerate_fibers(c);
    CHECK(r.det_degree == 3);
    CHECK(r.distinct_roots == 2);
    CHECK_FALSE(r.squarefree);
}

TEST_CASE("x.M.x reproduces the section form at random points") {
    std::mt19937 rng(47);
    SectionCoefficients c = SectionCoefficients::random(2, 42);
    SymMatrix3 m = build_matrix(c);
    for (int t = 0; t < 10; ++t) {
        Rational x0 = testutil::random_rational(rng, 9);
        Rational x1 = testutil::random_rational(rng, 9);
        Rational x2 = testutil::random_rational(rng, 9);
        Rational y0 = testutil::random_rational(rng, 9);
        Rational y1 = testutil::random_rational(rng, 9);
        const Rational x[3] = {x0, x1, x2};
        Rational quad(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                quad += x[i] * m.at(i, j).eval(y0, y1) * x[j];
        CHECK(quad == c.eval(x0, x1, x2, y0, y1));
    }
}

TEST_CASE("random sections have 3a distinct zeros") {
    FiberReport r1 = count_degenerate_fibers(SectionCoefficients::random(1, 42));
    CHECK(r1.distinct_roots == 3);
    CHECK(r1.squarefree);
    CHECK(r1.matches_expected);
    CHECK(r1.k_from_liscio == 3);
    CHECK(r1.n == 11);
    CHECK(r1.prop_vfs_equality);

    FiberReport r3 = count_degenerate_fibers(SectionCoefficients::random(3, 42));
    CHECK(r3.distinct_roots == 9);
    CHECK(r3.squarefree);
    CHECK(r3.n == 23);
    CHECK(r3.prop_vfs_equality);
}

TEST_CASE("engineered non-generic instance: diag(y0, y0, y0 + y1)") {
    SectionCoefficients c(1);
    c.set(0, 0, 1, Rational(1));
    c.set(1, 1, 1, Rational(1));
    c.set(2, 2, 0, Rational(1));
    c.set(2, 2, 1, Rational(1));
    FiberReport r = count_degenerate_fibers(c);
    CHECK(r.det_degree == 3);
    CHECK(r.distinct_roots == 2);
    CHECK_FALSE(r.squarefree);
    CHECK_FALSE(r.matches_expected);
}

TEST_CASE("20 seeds per a: genericity with at most one redraw") {
    for (long a = 1; a <= 3; ++a) {
        int direct = 0;
        for (std::uint32_t seed = 1; seed <= 20; ++seed) {
            bool good = false;
            try {
                FiberReport r = count_degenerate_fibers(SectionCoefficients::random(a, seed));
                good = r.squarefree && r.distinct_roots == 3 * a;
            } catch (const std::domain_error&) {
                good = false;
            }
            if (good) {
                ++direct;
            } else {
                std::ostringstream log;
                GenericCount gc = count_with_redraw(a, seed, &log);
                CHECK(gc.redrawn);
                CHECK(gc.seed_used == seed + 1);
                CHECK(log.str().find("redraw") != std::string::npos);
                CHECK(gc.report.distinct_roots == 3 * a);
            }
        }
        CHECK(direct >= 19);
    }
}

TEST_CASE("count_with_redraw leaves generic draws alone") {
    GenericCount gc = count_with_redraw(1, 42);
    CHECK_FALSE(gc.redrawn);
    CHECK(gc.seed_used == 42);
    CHECK(gc.report.distinct_roots == 3);
}

TEST_CASE("section coefficients validate their index ranges") {
    SectionCoefficients c(1);
    CHECK_THROWS_AS(c.set(0, 0, 2, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(c.l(3, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(SectionCoefficients(0), std::invalid_argument);
    // symmetric access: (1,0) reads (0,1)
    c.set(0, 1, 0, Rational(5));
    CHECK(c.l(1, 0, 0) == Rational(5));
}

TEST_CASE("sharpness sweep") {
    SUBCASE("first row") {
        auto rows = sharpness_sweep(1);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].a == 1);
        CHECK(rows[0].d == 12);
        CHECK(rows[0].n == 11);
        CHECK(rows[0].two_n_minus_10 == 12);
        CHECK(rows[0].k == 3);
        CHECK(rows[0].k_lower_bound == 3);
    }
    SUBCASE("all equalities hold up to a = 50, quickly") {
        auto t0 = std::chrono::steady_clock::now();
        auto rows = sharpness_sweep(50);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        CHECK(rows.size() == 50);
        for (const auto& r : rows) {
            CHECK(r.d == r.two_n_minus_10);
            CHECK(r.k == r.k_lower_bound);
        }
        CHECK(ms < 1000.0);
    }
    SUBCASE("a_max must be positive") {
        CHECK_THROWS_AS(sharpness_sweep(0), std::invalid_argument);
    }
}
