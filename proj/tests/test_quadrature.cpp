#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laghyp/quadrature.hpp"

#include <cmath>
#include <random>

using namespace laghyp;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    for (int n : {2, 5, 16, 32}) {
        QuadRule r = gauss_legendre(n);
        // degree 2n-1 monomial over [-1,1]
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double acc = 0.0;
            for (size_t i = 0; i < r.nodes.size(); ++i)
                acc += r.weights[i] * std::pow(r.nodes[i], k);
            double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
            CHECK(std::abs(acc - exact) < 1e-13);
        }
    }
}

TEST_CASE("gauss-legendre weights sum to interval length") {
    QuadRule r = gauss_legendre(16, 2.0, 5.0);
    double s = 0.0;
    for (double w : r.weights) s += w;
    CHECK(s == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("gauss-jacobi01 moments") {
    // weight (1-v)^a v^b on [0,1]: int v^k (1-v)^a v^b dv = B(k+b+1, a+1)
    for (double a : {-0.5, 0.0, 0.7, 1.5}) {
        QuadRule r = gauss_jacobi01(24, a, 0.0);
        for (int k = 0; k <= 8; ++k) {
            double acc = 0.0;
            for (size_t i = 0; i < r.nodes.size(); ++i)
                acc += r.weights[i] * std::pow(r.nodes[i], k);
            double exact = std::exp(std::lgamma(k + 1.0) + std::lgamma(a + 1.0) -
                                    std::lgamma(k + a + 2.0));
            CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("gauss-jacobi01 with zero exponents matches legendre on [0,1]") {
    QuadRule j = gauss_jacobi01(12, 0.0, 0.0);
    QuadRule g = gauss_legendre(12, 0.0, 1.0);
    for (int i = 0; i < 12; ++i) {
        CHECK(j.nodes[i] == doctest::Approx(g.nodes[i]).epsilon(1e-12));
        CHECK(j.weights[i] == doctest::Approx(g.weights[i]).epsilon(1e-12));
    }
}

TEST_CASE("composite panels integrate a gaussian") {
    auto br = uniform_breakpoints(-8.0, 8.0, 12);
    QuadRule r = composite_legendre(br, 16);
    double acc = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::exp(-r.nodes[i] * r.nodes[i]);
    CHECK(acc == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("tree_sum matches plain sum and is order-deterministic") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> xs(1023);
    for (auto& x : xs) x = dist(rng);
    double ref = 0.0;
    for (double x : xs) ref += x;
    double a = tree_sum(xs);
    double b = tree_sum(xs);
    CHECK(a == b);
    CHECK(std::abs(a - ref) < 1e-12);
}

TEST_CASE("adaptive_integrate handles endpoint singularities") {
    // int_0^1 x^-0.5 dx = 2
    double v = adaptive_integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12,
                                  true, false);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
    // int_0^1 sqrt(1-x^2) dx = pi/4
    double w = adaptive_integrate([](double x) { return std::sqrt(1.0 - x * x); }, 0.0, 1.0, 1e-12,
                                  false, true);
    CHECK(w == doctest::Approx(M_PI / 4.0).epsilon(1e-10));
}

TEST_CASE("geometric ladder") {
    auto br = geometric_ladder(16.0, 7);
    CHECK(br.size() == 8);
    CHECK(br.front() == 0.0);
    CHECK(br.back() == 16.0);
    CHECK(br[1] == doctest::Approx(0.25));
}
