#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laghyp/grid.hpp"
#include "laghyp/quadrature.hpp"

#include <cmath>

using namespace laghyp;

namespace {

std::shared_ptr<const SpaceGrid> default_space(const HypergroupContext& ctx) {
    return build_space_grid(ctx, 10.0, 16.0, 288, 384);
}

std::shared_ptr<const DualGrid> default_dual(const HypergroupContext& ctx) {
    return build_dual_grid(ctx, 16.0, 176, 65536, 1024.0);
}

} // namespace

TEST_CASE("space grid self-tests pass for alpha in [0, 3]") {
    for (double a : {0.0, 0.5, 1.0, 2.5, 3.0}) {
        HypergroupContext ctx = HypergroupContext::make(a);
        auto g = default_space(ctx);
        CHECK(g->gaussian_selftest_defect < 1e-6);
        // the measure of B_1 through the raw node indicator is the coarse tier
        CHECK(g->ball_indicator_defect < 0.05);
    }
}

TEST_CASE("space grid: gaussian catalog integral, every alpha") {
    for (double a : {0.0, 1.0, 2.5}) {
        HypergroupContext ctx = HypergroupContext::make(a);
        auto g = default_space(ctx);
        SampledFunction f = sample(g, [](double x, double t) {
            return std::complex<double>(std::exp(-x * x - t * t), 0.0);
        });
        double v = lp_norm_space(f, 1.0);
        CHECK(v == doctest::Approx(0.5 / std::sqrt(M_PI)).epsilon(1e-10));
    }
}

TEST_CASE("space grid: indicator of B_1 in the norm path (coarse tier)") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    auto g = default_space(ctx);
    SampledFunction ind = sample(g, [](double x, double t) {
        double inside = x * x * x * x + 4.0 * t * t < 1.0 ? 1.0 : 0.0;
        return std::complex<double>(inside, 0.0);
    });
    CHECK(lp_norm_space(ind, 1.0) == doctest::Approx(0.125).epsilon(5e-3));
}

TEST_CASE("grid refinement: smooth norms settle below 1e-8") {
    HypergroupContext ctx = HypergroupContext::make(1.0);
    auto g1 = default_space(ctx);
    auto g2 = build_space_grid(ctx, 10.0, 16.0, 576, 768);
    auto f = [](double x, double t) {
        return std::complex<double>(x * x * std::exp(-x * x - 0.5 * t * t), 0.0);
    };
    for (double p : {1.0, 2.0, 3.0}) {
        double n1 = lp_norm_space(sample(g1, f), p, 1.0);
        double n2 = lp_norm_space(sample(g2, f), p, 1.0);
        CHECK(std::abs(n1 - n2) / n2 < 1e-8);
    }
}

TEST_CASE("p=inf norm is the limit of p-norms on smooth data") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    auto g = default_space(ctx);
    SampledFunction f = sample(g, [](double x, double t) {
        return std::complex<double>(std::exp(-x * x - t * t), 0.0);
    });
    double sup = lp_norm_space(f, std::numeric_limits<double>::infinity());
    CHECK(sup == doctest::Approx(1.0).epsilon(1e-3)); // node nearest the origin
    // exact asymptotics for this peak: 1 - ||f||_p ~ (3/2) ln(p)/p,
    // about 11% at p = 64 and 4% at p = 256
    double gap64 = std::abs(lp_norm_space(f, 64.0) - sup) / sup;
    double gap256 = std::abs(lp_norm_space(f, 256.0) - sup) / sup;
    CHECK(gap64 < 0.13);
    CHECK(gap256 < 0.05);
    CHECK(gap256 < 0.5 * gap64);
}

TEST_CASE("norm monotonicity in the weight exponent away from the unit ball") {
    HypergroupContext ctx = HypergroupContext::make(0.5);
    auto g = default_space(ctx);
    // bump supported where |(x,t)| >= 1 (centered near homogeneous radius 2)
    SampledFunction f = sample(g, [](double x, double t) {
        double q = x * x * x * x + 4.0 * t * t - 16.0;
        return std::complex<double>(std::exp(-q * q / 64.0), 0.0);
    });
    double prev = -1.0;
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        double v = lp_norm_space(f, 2.0, a);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("dual grid self-tests for alpha in [0, 3]") {
    for (double a : {0.0, 0.5, 1.0, 2.5, 3.0}) {
        HypergroupContext ctx = HypergroupContext::make(a);
        auto g = default_dual(ctx);
        CHECK(g->gs_selftest_defect < 1e-6);
        CHECK(g->ball_selftest_defect < 1e-6);
        CHECK(g->m_max_effective > 1000); // the nu cap demands deep m near lambda = 0
        // symmetric layout, zero excluded
        size_t n = g->n_lambda();
        for (size_t j = 0; j < n / 2; ++j) {
            CHECK(g->lambda_nodes[j] == -g->lambda_nodes[n - 1 - j]);
            CHECK(g->m_count[j] == g->m_count[n - 1 - j]);
        }
        CHECK(g->lambda_nodes[n / 2 - 1] < 0.0);
        CHECK(g->lambda_nodes[n / 2] > 0.0);
        for (double w : g->lambda_weights) CHECK(w >= 0.0);
    }
}

TEST_CASE("dual ball measure on grid scales like r^(alpha+2)") {
    for (double a : {0.0, 1.0}) {
        HypergroupContext ctx = HypergroupContext::make(a);
        auto g = default_dual(ctx);
        double v1 = dual_ball_measure_on_grid(*g, 0.5);
        double v2 = dual_ball_measure_on_grid(*g, 2.0);
        CHECK(v2 / v1 == doctest::Approx(std::pow(4.0, a + 2.0)).epsilon(1e-8));
        CHECK(dual_ball_measure_on_grid(*g, 1.0) ==
              doctest::Approx(dual_ball_volume(1.0, ctx)).epsilon(1e-8));
    }
}

TEST_CASE("dual norms of g_1 match the closed forms") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    auto g = default_dual(ctx);
    SpectralFunction gs;
    gs.grid = g;
    gs.values.resize(g->total_cells());
    for (size_t j = 0; j < g->n_lambda(); ++j)
        for (int m = 0; m < g->m_count[j]; ++m) {
            double nu = g->nu(j, m);
            gs.values[g->cell(j, m)] = std::exp(-nu * nu);
        }
    CHECK(lp_norm_dual(gs, 1.0) == doctest::Approx(M_PI * M_PI / 32.0).epsilon(1e-6));
    CHECK(lp_norm_dual(gs, 2.0) == doctest::Approx(M_PI / 8.0).epsilon(1e-6));
}

TEST_CASE("dual indicator norm lands in the relaxed tier") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    auto g = default_dual(ctx);
    SpectralFunction ind;
    ind.grid = g;
    ind.values.resize(g->total_cells());
    for (size_t j = 0; j < g->n_lambda(); ++j)
        for (int m = 0; m < g->m_count[j]; ++m)
            ind.values[g->cell(j, m)] = g->nu(j, m) < 1.0 ? 1.0 : 0.0;
    // sharp staircase cut in m: coarse tier only
    CHECK(lp_norm_dual(ind, 1.0) == doctest::Approx(M_PI * M_PI / 32.0).epsilon(2e-2));
}

TEST_CASE("interpolation reproduces smooth samples off-grid") {
    HypergroupContext ctx = HypergroupContext::make(1.0);
    auto g = default_space(ctx);
    auto fn = [](double x, double t) {
        return std::complex<double>(std::exp(-0.7 * x * x - 0.3 * t * t) * std::cos(0.5 * t),
                                    std::exp(-x * x - 0.2 * t * t));
    };
    SampledFunction f = sample(g, fn);
    for (double x : {0.05, 0.7, 2.31, 6.5}) {
        for (double t : {-9.4, -0.13, 1.9, 14.2}) {
            auto v = interp_space(f, x, t);
            CHECK(std::abs(v - fn(x, t)) < 1e-7);
        }
    }
    // outside the box reads zero
    CHECK(interp_space(f, 11.0, 0.0) == std::complex<double>(0.0, 0.0));
    CHECK(interp_space(f, 1.0, 17.0) == std::complex<double>(0.0, 0.0));
    // even reflection through x = 0
    CHECK(std::abs(interp_space(f, -0.4, 1.0) - interp_space(f, 0.4, 1.0)) == 0.0);
}

TEST_CASE("starved grids fail their self-tests") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    CHECK_THROWS_AS(build_space_grid(ctx, 10.0, 16.0, 4, 32), GridResolutionError);
    CHECK_THROWS_AS(build_dual_grid(ctx, 16.0, 8, 64, 128.0), GridResolutionError);
}

TEST_CASE("builder argument validation") {
    HypergroupContext ctx = HypergroupContext::make(0.0);
    CHECK_THROWS_AS(build_space_grid(ctx, -1.0, 16.0, 96, 384), std::invalid_argument);
    CHECK_THROWS_AS(build_dual_grid(ctx, 16.0, 112, 8, 128.0), std::invalid_argument);
}
