#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laghyp/hypergroup.hpp"
#include "laghyp/laguerre.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace laghyp;

TEST_CASE("recurrence base cases") {
    CHECK(laguerre_poly(0, 0.7, 3.1) == 1.0);
    CHECK(laguerre_poly(1, 0.0, 2.0) == doctest::Approx(-1.0));
    CHECK(laguerre_poly(2, 1.0, 0.0) == doctest::Approx(3.0));
}

TEST_CASE("values at zero") {
    CHECK(laguerre_at_zero(0, 2.3) == doctest::Approx(1.0));
    CHECK(laguerre_at_zero(1, 0.0) == doctest::Approx(1.0));
    CHECK(laguerre_at_zero(5, 2.0) == doctest::Approx(21.0)); // C(7,5)
    for (int m : {0, 3, 17, 200}) {
        for (double a : {0.0, 0.5, 1.0, 2.5}) {
            CHECK(laguerre_poly(m, a, 0.0) ==
                  doctest::Approx(laguerre_at_zero(m, a)).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero table matches log-space evaluation") {
    auto table = laguerre_zero_table(1.5, 300);
    for (int m : {0, 1, 2, 50, 299})
        CHECK(table[m] == doctest::Approx(laguerre_at_zero(m, 1.5)).epsilon(1e-12));
}

TEST_CASE("recurrence matches binomial sum for small m") {
    // u capped so the alternating oracle keeps ~12 digits in doubles
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> du(0.0, 8.0);
    for (double a : {0.0, 0.5, 1.0, 2.0, 2.5}) {
        for (int m = 0; m <= 10; ++m) {
            for (int rep = 0; rep < 8; ++rep) {
                double u = du(rng);
                double lib = laguerre_poly(m, a, u);
                double ref = oracles::laguerre_binomial_sum(m, a, u);
                CHECK(lib == doctest::Approx(ref).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("psi sweep: normalization, boundedness and stability") {
    std::vector<double> psi(20001);
    for (double a : {0.0, 0.5, 1.0}) {
        for (double u : {0.0, 0.3, 5.0, 80.0, 900.0}) {
            laguerre_psi_sweep(a, u, psi);
            if (u == 0.0)
                for (double v : psi) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
            for (double v : psi) CHECK(std::abs(v) <= 1.0 + 1e-12);
        }
    }
    // agreement with the direct product for moderate m
    laguerre_psi_sweep(0.5, 7.0, psi);
    for (int m : {0, 1, 5, 40}) {
        double direct = std::exp(-3.5) * laguerre_poly(m, 0.5, 7.0) / laguerre_at_zero(m, 0.5);
        CHECK(psi[m] == doctest::Approx(direct).epsilon(1e-11));
    }
}

TEST_CASE("phi special values") {
    HypergroupContext ctx = HypergroupContext::make(0.7);
    // phi(0,0) = 1 for all lambda, m
    for (int m : {0, 4})
        for (double l : {-2.0, 0.0, 1.5}) {
            auto v = phi(DualPoint{l, m}, SpacePoint{0.0, 0.0}, ctx);
            CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-14);
        }
    // lambda = 0 kills every non-constant factor
    for (int m : {0, 7}) {
        auto v = phi(DualPoint{0.0, m}, SpacePoint{1.3, -2.2}, ctx);
        CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-14);
    }
    // m = 0 is the pure Gaussian wave
    auto v = phi(DualPoint{1.2, 0}, SpacePoint{0.8, 0.5}, ctx);
    std::complex<double> expect = std::exp(std::complex<double>(-0.5 * 1.2 * 0.64, 1.2 * 0.5));
    CHECK(std::abs(v - expect) < 1e-14);
}

TEST_CASE("phi conjugation symmetry is exact") {
    HypergroupContext ctx = HypergroupContext::make(1.0);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dx(0.0, 3.0), dt(-4.0, 4.0), dl(0.1, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        SpacePoint p{dx(rng), dt(rng)};
        double l = dl(rng);
        int m = rep % 6;
        auto a = phi(DualPoint{l, m}, p, ctx);
        auto b = phi(DualPoint{-l, m}, p, ctx);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == -b.imag());
    }
}

TEST_CASE("eigenfunction residual under the fd sub-laplacian") {
    {
        HypergroupContext ctx = HypergroupContext::make(0.0);
        CHECK(eigen_residual(DualPoint{1.0, 0}, ctx, FdConfig{6, 1e-3}) < 1e-6);
    }
    {
        HypergroupContext ctx = HypergroupContext::make(1.0);
        CHECK(eigen_residual(DualPoint{0.5, 3}, ctx, FdConfig{6, 1e-3}) < 1e-6);
        CHECK(dual_norm(DualPoint{0.5, 3}, ctx) == doctest::Approx(8.0));
    }
}

TEST_CASE("residual decreases at the stencil order") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    DualPoint q{1.0, 1};
    double r1 = eigen_residual(q, ctx, FdConfig{4, 0.2});
    double r2 = eigen_residual(q, ctx, FdConfig{4, 0.1});
    // 4th order: halving h should shrink the residual by about 16
    CHECK(r1 / r2 > 8.0);
    CHECK(r1 / r2 < 32.0);
}

TEST_CASE("lambda = 0 is rejected") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    CHECK_THROWS_AS(eigen_residual(DualPoint{0.0, 2}, ctx, FdConfig{}), std::invalid_argument);
}
