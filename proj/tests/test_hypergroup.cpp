#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laghyp/hypergroup.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace laghyp;

namespace {
const double kPi = M_PI;
}

TEST_CASE("homogeneous norm values and scaling") {
    CHECK(homogeneous_norm({1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(homogeneous_norm({0.0, 1.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(homogeneous_norm({1.0, 1.0}) == doctest::Approx(std::pow(5.0, 0.25)));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(0.01, 4.0), dt(-5.0, 5.0);
    for (int rep = 0; rep < 200; ++rep) {
        double x = d(rng), t = dt(rng), r = d(rng);
        double lhs = homogeneous_norm({r * x, r * r * t});
        double rhs = r * homogeneous_norm({x, t});
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("dual norm values and scaling") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    HypergroupContext c1 = HypergroupContext::make(1.0);
    CHECK(dual_norm({1.0, 0}, c0) == doctest::Approx(2.0));
    CHECK(dual_norm({0.0, 7}, c1) == 0.0);
    CHECK(dual_norm({-2.0, 1}, c1) == doctest::Approx(16.0));
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> d(0.01, 4.0);
    for (int rep = 0; rep < 100; ++rep) {
        double l = d(rng), r = d(rng);
        int m = rep % 9;
        CHECK(dual_norm({r * r * l, m}, c1) ==
              doctest::Approx(r * r * dual_norm({l, m}, c1)).epsilon(1e-13));
    }
}

TEST_CASE("space density") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    HypergroupContext c1 = HypergroupContext::make(1.0);
    CHECK(space_density({1.0, 3.0}, c0) == doctest::Approx(1.0 / kPi));
    CHECK(space_density({0.0, -1.0}, c1) == 0.0);
    CHECK(space_density({2.0, 0.0}, c1) == doctest::Approx(8.0 / kPi));
}

TEST_CASE("plancherel weight") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    HypergroupContext c1 = HypergroupContext::make(1.0);
    CHECK(plancherel_weight({1.0, 0}, c0) == doctest::Approx(1.0));
    CHECK(plancherel_weight({0.0, 5}, c1) == 0.0);
    CHECK(plancherel_weight({2.0, 2}, c1) == doctest::Approx(12.0));
}

TEST_CASE("unit ball volume") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    CHECK(unit_ball_volume(c0) == doctest::Approx(0.125).epsilon(1e-9));
    // alpha = 1 regression value (= 1/(6 pi), confirmed by the Beta form)
    HypergroupContext c1 = HypergroupContext::make(1.0);
    CHECK(unit_ball_volume(c1) == doctest::Approx(0.05305164769729845).epsilon(1e-9));
    for (double a : {0.0, 0.5, 1.0, 2.5, 3.0}) {
        HypergroupContext c = HypergroupContext::make(a);
        CHECK(unit_ball_volume(c) ==
              doctest::Approx(oracles::omega_closed_form(a)).epsilon(1e-10));
    }
}

TEST_CASE("ball measure homogeneity m(B_2)/m(B_1) = 2^Q") {
    for (double a : {0.0, 1.0}) {
        double b1 = ball_region_integral(0.0, 1.0, a, 1e-12);
        double b2 = ball_region_integral(0.0, 2.0, a, 1e-12);
        CHECK(b2 / b1 == doctest::Approx(std::pow(2.0, 2.0 * a + 4.0)).epsilon(1e-9));
    }
}

TEST_CASE("series constant") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    CHECK(c0.series_constant == doctest::Approx(kPi * kPi / 32.0).epsilon(1e-12));
    // alpha = 1: S_1 = pi^2/384 since L_m^1(0) = m+1 and (4m+6-2)^... reduces to zeta(2)/64
    HypergroupContext c1 = HypergroupContext::make(1.0);
    CHECK(c1.series_constant == doctest::Approx(kPi * kPi / 384.0).epsilon(1e-12));
    // partial sums increase in the truncation order
    double prev = 0.0;
    for (int mmax : {10, 50, 200, 800}) {
        double s = series_partial_sum(0.5, mmax);
        CHECK(s > prev);
        prev = s;
    }
    // reported tail bound dominates the doubling residual
    HypergroupContext small = HypergroupContext::make(0.5, 1e-10, 200);
    HypergroupContext big = HypergroupContext::make(0.5, 1e-10, 400);
    double residual = std::abs(big.series_constant - small.series_constant);
    CHECK(small.series_detail.tail_bound + big.series_detail.tail_bound >= residual);
    CHECK(small.series_constant == doctest::Approx(big.series_constant).epsilon(1e-12));
    // raw truncation alone must not pass for demanding tolerances
    CHECK(std::abs(series_partial_sum(0.0, 400) - kPi * kPi / 32.0) > 1e-6);
}

TEST_CASE("dual ball volume: closed form, power law, brute force") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    CHECK(dual_ball_volume(1.0, c0) == doctest::Approx(kPi * kPi / 32.0).epsilon(1e-12));
    for (double a : {0.0, 0.5, 1.0, 2.5}) {
        HypergroupContext c = HypergroupContext::make(a);
        for (double r : {0.5, 1.0, 4.0}) {
            CHECK(dual_ball_volume(2.0 * r, c) / dual_ball_volume(r, c) ==
                  doctest::Approx(std::pow(2.0, a + 2.0)).epsilon(1e-13));
            double brute = dual_ball_bruteforce(r, c);
            CHECK(dual_ball_volume(r, c) == doctest::Approx(brute).epsilon(1e-8));
        }
    }
}

TEST_CASE("space ball moment") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    CHECK(space_ball_moment(0.0, 1.0, c0) == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(space_ball_moment(2.0, 1.0, c0) == doctest::Approx(0.25).epsilon(1e-9));
    // layered closed form against direct region quadrature
    for (double a : {0.0, 1.0}) {
        HypergroupContext c = HypergroupContext::make(a);
        for (double cc : {0.0, 1.0, 2.5}) {
            for (double r : {0.7, 1.0, 2.0}) {
                double closed = space_ball_moment(cc, r, c);
                double brute = ball_region_integral(cc, r, a, 1e-11);
                CHECK(closed == doctest::Approx(brute).epsilon(1e-8));
            }
        }
    }
    // c -> Q from below diverges monotonically
    double prev = 0.0;
    for (double cc : {3.0, 3.5, 3.9, 3.99}) {
        double v = space_ball_moment(cc, 1.0, c0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(space_ball_moment(4.0, 1.0, c0), DivergentIntegralError);
    CHECK_THROWS_AS(space_ball_moment(4.5, 1.0, c0), DivergentIntegralError);
}

TEST_CASE("dual tail integral") {
    HypergroupContext c0 = HypergroupContext::make(0.0);
    CHECK(dual_tail_integral(4.0, 1.0, c0) == doctest::Approx(kPi * kPi / 32.0).epsilon(1e-12));
    // power law in r
    for (double c : {3.0, 4.0, 5.5}) {
        double v1 = dual_tail_integral(c, 1.0, c0);
        double v2 = dual_tail_integral(c, 2.0, c0);
        CHECK(v2 / v1 == doctest::Approx(std::pow(2.0, -(c - 2.0))).epsilon(1e-13));
    }
    // eps -> 0 divergence like 1/eps
    double v_eps = dual_tail_integral(2.0 + 1e-6, 1.0, c0);
    CHECK(v_eps > 1e5);
    CHECK_THROWS_AS(dual_tail_integral(2.0, 1.0, c0), DivergentIntegralError);
    // brute force cross-check
    for (double a : {0.0, 1.0}) {
        HypergroupContext c = HypergroupContext::make(a);
        for (double cc : {a + 3.0, a + 4.5}) {
            for (double r : {0.5, 1.0, 4.0}) {
                CHECK(dual_tail_integral(cc, r, c) ==
                      doctest::Approx(dual_tail_bruteforce(cc, r, c)).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("context invariants") {
    for (double a : {0.0, 0.3, 1.0, 3.0}) {
        HypergroupContext c = HypergroupContext::make(a);
        CHECK(c.Q == 2.0 * a + 4.0);
        CHECK(c.omega_alpha > 0.0);
        CHECK(c.series_constant > 0.0);
        CHECK(c.series_detail.converged);
    }
    CHECK_THROWS_AS(HypergroupContext::make(-0.5), std::domain_error);
}
