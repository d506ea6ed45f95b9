#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bne/bounds.hpp"
#include "bne/estimators.hpp"
#include "bne/oracle.hpp"

using namespace bne;
using doctest::Approx;

namespace {

BneParams params(double delta, double one_norm) {
    BneParams p;
    p.delta = delta;
    p.one_norm = one_norm;
    return p;
}

}  // namespace

TEST_CASE("algorithm names round trip") {
    const Algorithm all[] = {Algorithm::qbne_chebyshev, Algorithm::cbne_power,
                             Algorithm::cbne_chebyshev, Algorithm::qbne_power};
    for (const auto a : all) {
        const auto back = algorithm_from_name(algorithm_name(a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    CHECK(std::string(algorithm_name(Algorithm::qbne_power)) == "qbne-power");
    CHECK_FALSE(algorithm_from_name("nope").has_value());
}

TEST_CASE("planned budgets for the four benchmark parameter sets") {
    struct Expect {
        double delta, one_norm;
        std::uint64_t qbne_cheb_per_power, qbne_cheb_steps;
        std::uint64_t cbne_power_q, cbne_power_steps;
        std::uint64_t cbne_cheb_total, cbne_cheb_steps;
        int power_degree;
    };
    const Expect rows[] = {
        {0.5, 4.0 / 3.0, 1071074, 22492554, 75659, 453954, 2215091, 13100794, 6},
        {0.5, 3.0 / 2.0, 1071074, 22492554, 310949, 1865694, 8957432, 53258744, 6},
        {1.0 / 3.0, 4.0 / 3.0, 9594914, 268657592, 425100, 3825900, 25080104,
         167270828, 9},
        {1.0 / 3.0, 3.0 / 2.0, 9594914, 268657592, 3541895, 31877055, 122402093,
         830201903, 9},
    };
    for (const auto& row : rows) {
        CAPTURE(row.delta);
        CAPTURE(row.one_norm);
        const BneParams p = params(row.delta, row.one_norm);

        const ShotPlan qc = plan(Algorithm::qbne_chebyshev, p);
        REQUIRE(!qc.budgets.empty());
        for (std::size_t i = 0; i < qc.budgets.size(); ++i) {
            CHECK(qc.budgets[i].power == static_cast<int>(i) + 1);
            CHECK(qc.budgets[i].samples == row.qbne_cheb_per_power);
        }
        CHECK(qc.total_steps() == row.qbne_cheb_steps);

        const ShotPlan cp = plan(Algorithm::cbne_power, p);
        REQUIRE(cp.budgets.size() == 1);
        CHECK(cp.budgets[0].power == row.power_degree);
        CHECK(cp.budgets[0].samples == row.cbne_power_q);
        CHECK(cp.total_steps() == row.cbne_power_steps);
        CHECK(cp.a0 == 0.0);
        REQUIRE(cp.coeffs.size() == 1);
        CHECK(cp.coeffs[0] == 1.0);

        const ShotPlan cc = plan(Algorithm::cbne_chebyshev, p);
        CHECK(cc.total_samples() == row.cbne_cheb_total);
        CHECK(cc.total_steps() == row.cbne_cheb_steps);
        // only powers matching the parity of the degree are sampled
        for (const auto& b : cc.budgets) {
            CHECK(b.power % 2 == cc.degree % 2);
            CHECK(b.samples >= 1);
        }

        const ShotPlan qp = plan(Algorithm::qbne_power, p);
        REQUIRE(qp.budgets.size() == 1);
        CHECK(qp.budgets[0].power == row.power_degree);
        CHECK(qp.budgets[0].samples == 600);
        CHECK(qp.total_steps() == 600ull * row.power_degree);
    }
}

TEST_CASE("per-monomial budget details at delta = 1/2") {
    const ShotPlan cc = plan(Algorithm::cbne_chebyshev, params(0.5, 4.0 / 3.0));
    CHECK(cc.degree == 6);
    REQUIRE(cc.eta_prime.has_value());
    CHECK(*cc.eta_prime == Approx(0.03451061539).epsilon(1e-9));
    REQUIRE(cc.budgets.size() == 3);
    const std::uint64_t expect_q[] = {263, 94350, 2120478};
    const int expect_power[] = {2, 4, 6};
    const Polynomial p = cbne_poly(6, 0.5);
    CHECK(cc.a0 == Approx(p.coeff(0)).epsilon(1e-14));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(cc.budgets[i].power == expect_power[i]);
        CHECK(cc.budgets[i].samples == expect_q[i]);
        CHECK(cc.coeffs[i] == Approx(p.coeff(expect_power[i])).epsilon(1e-14));
        // accuracy split across the nonzero monomials
        CHECK(cc.budgets[i].epsilon_i ==
              Approx(0.1 / (2.0 * 3.0 * std::abs(p.coeff(expect_power[i]))))
                  .epsilon(1e-12));
    }

    const ShotPlan cc3 = plan(Algorithm::cbne_chebyshev, params(1.0 / 3.0, 4.0 / 3.0));
    CHECK(cc3.degree == 7);
    REQUIRE(cc3.eta_prime.has_value());
    CHECK(*cc3.eta_prime == Approx(0.02599625357).epsilon(1e-9));
    const std::uint64_t expect_q3[] = {62, 62800, 4019164, 20998078};
    const int expect_power3[] = {1, 3, 5, 7};
    REQUIRE(cc3.budgets.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(cc3.budgets[i].power == expect_power3[i]);
        CHECK(cc3.budgets[i].samples == expect_q3[i]);
    }
}

TEST_CASE("single-monomial degenerate plan") {
    BneParams p;
    p.epsilon = 0.6;
    p.eta = 0.1;
    p.delta = 0.96;
    p.one_norm = 1.0;
    const ShotPlan cc = plan(Algorithm::cbne_chebyshev, p);
    CHECK(cc.degree == 2);
    REQUIRE(cc.budgets.size() == 1);
    CHECK(cc.budgets[0].power == 2);
    const Polynomial poly = cbne_poly(2, 0.96);
    CHECK(cc.budgets[0].epsilon_i ==
          Approx(0.6 / (2.0 * std::abs(poly.coeff(2)))).epsilon(1e-12));
    // eta is not split when there is a single estimation
    CHECK(*cc.eta_prime == Approx(0.1).epsilon(1e-12));
}

TEST_CASE("constant terms and coefficients of the quantum chebyshev plan") {
    const ShotPlan qc = plan(Algorithm::qbne_chebyshev, params(0.5, 4.0 / 3.0));
    const Polynomial p = qbne_poly(6, 0.5);
    CHECK(qc.degree == 6);
    CHECK(qc.a0 == Approx(1.0).epsilon(1e-12));
    REQUIRE(qc.coeffs.size() == 6);
    for (int i = 1; i <= 6; ++i) {
        CHECK(qc.coeffs[i - 1] == Approx(p.coeff(i)).epsilon(1e-14));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(plan(Algorithm::qbne_power, {0.0, 0.1, 0.5, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(plan(Algorithm::qbne_power, {0.1, 1.0, 0.5, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(plan(Algorithm::qbne_power, {0.1, 0.1, 0.0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(plan(Algorithm::qbne_power, {0.1, 0.1, 1.5, {}}),
                    std::invalid_argument);
    // a gap bound of exactly 1 is legal for the power rule but not the
    // chebyshev rule
    CHECK(plan(Algorithm::qbne_power, {0.1, 0.1, 1.0, {}}).degree == 3);
    CHECK(plan(Algorithm::cbne_power, {0.1, 0.1, 1.0, {}}).degree == 3);
    CHECK_THROWS_AS(plan(Algorithm::qbne_chebyshev, {0.1, 0.1, 1.0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(plan(Algorithm::cbne_chebyshev, {0.1, 0.1, 1.0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(plan(Algorithm::cbne_power, {0.1, 0.1, 0.5, -1.0}),
                    std::invalid_argument);
}

TEST_CASE("one-norm defaults to the worst-case bound of two") {
    BneParams with_default;
    with_default.delta = 0.5;
    const ShotPlan loose = plan(Algorithm::cbne_power, with_default);
    const ShotPlan tight = plan(Algorithm::cbne_power, params(0.5, 4.0 / 3.0));
    CHECK(loose.total_samples() > tight.total_samples());
    // quantum plans ignore the walk range entirely
    CHECK(plan(Algorithm::qbne_power, with_default).total_samples() ==
          plan(Algorithm::qbne_power, params(0.5, 4.0 / 3.0)).total_samples());
}

TEST_CASE("smaller accuracy targets never shrink the plan") {
    for (const Algorithm a : {Algorithm::qbne_chebyshev, Algorithm::cbne_power,
                              Algorithm::cbne_chebyshev, Algorithm::qbne_power}) {
        std::uint64_t prev = 0;
        for (const double eps : {0.2, 0.1, 0.05}) {
            BneParams p = params(0.5, 4.0 / 3.0);
            p.epsilon = eps;
            const std::uint64_t total = plan(a, p).total_samples();
            CHECK(total >= prev);
            prev = total;
        }
    }
}

TEST_CASE("bound reports agree with the sampling plans") {
    for (const Algorithm a : {Algorithm::qbne_chebyshev, Algorithm::cbne_power,
                              Algorithm::cbne_chebyshev, Algorithm::qbne_power}) {
        const BneParams p = params(1.0 / 3.0, 1.5);
        const ShotPlan pl = plan(a, p);
        const BoundReport r = bound(a, p);
        CHECK(r.degree == pl.degree);
        CHECK(r.step_count == pl.total_steps());
        if (a == Algorithm::qbne_chebyshev) {
            CHECK(r.sample_count == pl.budgets.front().samples);
        } else {
            CHECK(r.sample_count == pl.total_samples());
        }
        CHECK(r.epsilon == p.epsilon);
        CHECK(r.delta == p.delta);
    }
}

TEST_CASE("pair complex runs are exact") {
    const CliqueComplex cx(complete_multipartite(2, 1), 1);

    // every laplacian block sample survives, so the estimate collapses to the
    // filter value at 1, which is 1/T_4(2) = 1/97 for this parameter choice
    BneParams p;
    p.epsilon = 0.3;
    p.eta = 0.3;
    p.delta = 0.5;
    const BneResult qc = run_algorithm(cx, Algorithm::qbne_chebyshev, p, 11);
    CHECK(qc.plan.degree == 4);
    CHECK(qc.estimate == Approx(1.0 / 97.0).epsilon(1e-9));

    // every walk is absorbed immediately
    BneParams pw;
    pw.epsilon = 0.1;
    pw.eta = 0.1;
    pw.delta = 1.0;
    pw.one_norm = 0.0;
    const BneResult cp = run_algorithm(cx, Algorithm::cbne_power, pw, 12);
    CHECK(cp.estimate == 0.0);
    CHECK(cp.samples_used >= 1);
}

TEST_CASE("budget accounting and replay determinism") {
    const CliqueComplex cx(complete_multipartite(2, 3), 1);
    const BneParams p = params(0.5, 4.0 / 3.0);
    const BneResult a = run_algorithm(cx, Algorithm::qbne_power, p, 2027);
    const BneResult b = run_algorithm(cx, Algorithm::qbne_power, p, 2027);
    CHECK(a.estimate == b.estimate);
    CHECK(a.samples_used == 600);
    CHECK(a.markov_steps_used == 3600);
    CHECK(a.base_seed == 2027);
    CHECK(std::abs(a.estimate - 4.0 / 9.0) < 0.1);
    CHECK(a.estimate >= 0.0);
    CHECK(a.estimate <= 1.0);

    const BneResult c = run_algorithm(cx, Algorithm::qbne_power, p, 2028);
    CHECK(a.estimate != c.estimate);

    const BneResult named = qbne_power(cx, p, 2027);
    CHECK(named.estimate == a.estimate);
}

TEST_CASE("cbne power full budget on the smallest benchmark") {
    const Graph g = complete_multipartite(2, 3);
    const CliqueComplex cx(g, 1);
    const BneParams p = params(0.5, 4.0 / 3.0);
    const BneResult r = cbne_power(cx, p, 321);
    CHECK(r.samples_used == 75659);
    CHECK(r.markov_steps_used == 453954);
    // the planned budget guarantees half-accuracy 0.05 around the estimand,
    // itself within 0.05 of the truth
    CHECK(std::abs(r.estimate - 4.0 / 9.0) < 0.1);
}

TEST_SUITE("slow") {

TEST_CASE("quantum chebyshev convergence on the 2x4 benchmark") {
    const Graph g = complete_multipartite(2, 4);
    const CliqueComplex cx(g, 1);
    const BneParams p = params(0.5, 3.0 / 2.0);
    int within = 0;
    for (std::uint64_t run = 0; run < 10; ++run) {
        const BneResult r =
            run_algorithm(cx, Algorithm::qbne_chebyshev, p, 1600, run);
        if (std::abs(r.estimate - 0.5625) < 0.1) ++within;
    }
    CHECK(within >= 9);
}

TEST_CASE("classical chebyshev convergence on the 3x3 benchmark") {
    const Graph g = complete_multipartite(3, 3);
    const CliqueComplex cx(g, 2);
    const BneParams p = params(1.0 / 3.0, 4.0 / 3.0);
    int within = 0;
    for (std::uint64_t run = 0; run < 10; ++run) {
        const BneResult r =
            run_algorithm(cx, Algorithm::cbne_chebyshev, p, 1700, run);
        if (std::abs(r.estimate - 8.0 / 27.0) < 0.1) ++within;
    }
    CHECK(within >= 9);
}

}  // TEST_SUITE("slow")
