#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bne/chebyshev.hpp"

using namespace bne;
using doctest::Approx;

TEST_CASE("polynomial evaluation") {
    const Polynomial p({1.0, -2.0, 3.0});  // 1 - 2x + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p(0.0) == Approx(1.0));
    CHECK(p(2.0) == Approx(9.0));
    CHECK(p.coeff(1) == Approx(-2.0));
}

TEST_CASE("chebyshev coefficient tables") {
    const std::vector<std::vector<double>> tables = {
        {1},
        {0, 1},
        {-1, 0, 2},
        {0, -3, 0, 4},
        {1, 0, -8, 0, 8},
        {0, 5, 0, -20, 0, 16},
        {-1, 0, 18, 0, -48, 0, 32},
    };
    for (int d = 0; d < static_cast<int>(tables.size()); ++d) {
        CAPTURE(d);
        const Polynomial t = chebyshev_coeffs(d);
        REQUIRE(t.degree() == d);
        for (int i = 0; i <= d; ++i) CHECK(t.coeff(i) == tables[d][i]);
    }
}

TEST_CASE("chebyshev evaluation matches the trigonometric forms") {
    for (int d = 0; d <= 12; ++d) {
        for (int j = 0; j <= 20; ++j) {
            const double theta = 3.14159265358979323846 * j / 20.0;
            CHECK(chebyshev_eval(d, std::cos(theta)) ==
                  Approx(std::cos(d * theta)).epsilon(1e-10).scale(1.0));
        }
        for (double x : {1.1, 1.5, 2.0, 3.0}) {
            CHECK(chebyshev_eval(d, x) ==
                  Approx(std::cosh(d * std::acosh(x))).epsilon(1e-10));
        }
    }
    CHECK(chebyshev_eval(6, 2.0) == 1351.0);
}

TEST_CASE("gap filter polynomial, exact rationals at delta = 1/2") {
    const Polynomial p = qbne_poly(6, 0.5);
    // 1351 * coefficients are integers (1351 = T_6(2))
    const double expect[] = {1351, -9360, 26184, -37888, 29952, -12288, 2048};
    REQUIRE(p.degree() == 6);
    for (int i = 0; i <= 6; ++i) {
        CHECK(p.coeff(i) * 1351.0 == Approx(expect[i]).epsilon(1e-11));
    }
    CHECK(p(0.0) == Approx(1.0).epsilon(1e-12));
    // small everywhere on [delta, 1]
    for (int j = 0; j <= 50; ++j) {
        const double x = 0.5 + 0.5 * j / 50.0;
        CHECK(std::abs(p(x)) <= 1.0 / 1351.0 + 1e-12);
    }
    CHECK(two_norm_sq(p) == Approx(1787.665442326626).epsilon(1e-12));
}

TEST_CASE("reflected filter polynomial, parity and exact values") {
    const Polynomial p = cbne_poly(6, 0.5);
    const double expect[] = {-1, 0, 72, 0, -768, 0, 2048};
    REQUIRE(p.degree() == 6);
    for (int i = 0; i <= 6; ++i) {
        CHECK(p.coeff(i) * 1351.0 == Approx(expect[i]).epsilon(1e-11));
    }
    CHECK(p(1.0) == Approx(1.0).epsilon(1e-12));

    const Polynomial p7 = cbne_poly(7, 1.0 / 3.0);
    REQUIRE(p7.degree() == 7);
    // odd degree: even-power coefficients vanish identically
    for (int i = 0; i <= 7; i += 2) CHECK(p7.coeff(i) == 0.0);
    CHECK(p7.coeff(1) == Approx(-0.02491103202846975).epsilon(1e-12));
    CHECK(p7.coeff(3) == Approx(0.4483985765124555).epsilon(1e-12));
    CHECK(p7.coeff(5) == Approx(-2.01779359430605).epsilon(1e-12));
    CHECK(p7.coeff(7) == Approx(2.5943060498220643).epsilon(1e-12));
    CHECK(p7(1.0) == Approx(1.0).epsilon(1e-12));
    CHECK(two_norm_sq(qbne_poly(7, 1.0 / 3.0)) ==
          Approx(16014.303592912956).epsilon(1e-12));
}

TEST_CASE("coefficient expansion agrees with direct evaluation on a grid") {
    for (const double delta : {0.5, 1.0 / 3.0, 0.2}) {
        for (int d = 1; d <= 10; ++d) {
            CAPTURE(delta);
            CAPTURE(d);
            const Polynomial q = qbne_poly(d, delta);
            const Polynomial c = cbne_poly(d, delta);
            const double norm = chebyshev_eval(d, 1.0 / (1.0 - delta));
            for (int j = 0; j <= 100; ++j) {
                const double x = j / 100.0;
                const double qd = chebyshev_eval(d, (1.0 - x) / (1.0 - delta)) / norm;
                const double cd = chebyshev_eval(d, x / (1.0 - delta)) / norm;
                CHECK(q(x) == Approx(qd).epsilon(1e-8));
                CHECK(c(x) == Approx(cd).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("degree selection") {
    CHECK(degree_for(0.1, 0.5, DegreeRule::chebyshev) == 6);
    CHECK(degree_for(0.1, 1.0 / 3.0, DegreeRule::chebyshev) == 7);
    CHECK(degree_for(0.1, 0.5, DegreeRule::power) == 6);
    CHECK(degree_for(0.1, 1.0 / 3.0, DegreeRule::power) == 9);
    CHECK(degree_for(0.05, 0.5, DegreeRule::chebyshev) == 7);
    CHECK(degree_for(0.01, 0.5, DegreeRule::chebyshev) == 9);

    // smaller accuracy or smaller gap never shrinks the degree
    int prev = 0;
    for (const double eps : {0.2, 0.1, 0.05, 0.02, 0.01}) {
        const int d = degree_for(eps, 0.5, DegreeRule::chebyshev);
        CHECK(d >= prev);
        prev = d;
    }
    prev = 0;
    for (const double delta : {0.8, 0.5, 0.25, 0.125}) {
        const int d = degree_for(0.1, delta, DegreeRule::power);
        CHECK(d >= prev);
        prev = d;
    }

    CHECK_THROWS_AS(degree_for(0.0, 0.5, DegreeRule::chebyshev), std::invalid_argument);
    CHECK_THROWS_AS(degree_for(1.0, 0.5, DegreeRule::chebyshev), std::invalid_argument);
    CHECK_THROWS_AS(degree_for(0.1, 0.0, DegreeRule::chebyshev), std::invalid_argument);
    CHECK_THROWS_AS(degree_for(0.1, 1.0, DegreeRule::chebyshev), std::invalid_argument);
}

TEST_CASE("filter norm sandwich at the working degrees") {
    // with d chosen for eps = 0.1, the squared 2-norm is pinched between
    // (9/4)^d/(d+1) and (eps^2 d^3/3) (64/(1-delta))^(2d)
    const double eps = 0.1;
    for (const double delta : {0.5, 1.0 / 3.0}) {
        const int d = degree_for(eps, delta, DegreeRule::chebyshev);
        const double norm_sq = two_norm_sq(qbne_poly(d, delta));
        const double lower = std::pow(2.25, d) / (d + 1);
        const double upper =
            eps * eps * d * d * d / 3.0 * std::pow(64.0 / (1.0 - delta), 2 * d);
        CHECK(lower <= norm_sq);
        CHECK(norm_sq <= upper);
    }
}

TEST_CASE("filter magnitude at the selected degree meets the accuracy target") {
    for (const double delta : {0.5, 1.0 / 3.0}) {
        for (const double eps : {0.1, 0.05, 0.01}) {
            const int d = degree_for(eps, delta, DegreeRule::chebyshev);
            CHECK(1.0 / chebyshev_eval(d, 1.0 / (1.0 - delta)) <= eps);
        }
    }
}
