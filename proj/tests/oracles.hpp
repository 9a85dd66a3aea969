// Independent oracles used by the test suites. Everything here is
// deliberately written against different formulas or algorithms than
// the library paths it checks.
#pragma once

#include <cmath>
#include <complex>

namespace oracles {

// L_m^alpha(u) as the explicit binomial sum
// sum_k (-1)^k C(m+alpha, m-k) u^k / k!, workable for small m.
inline double laguerre_binomial_sum(int m, double alpha, double u) {
    // extended precision: the alternating sum cancels several digits
    long double total = 0.0L;
    for (int k = 0; k <= m; ++k) {
        // C(m+alpha, m-k) = Gamma(m+alpha+1) / (Gamma(m-k+1) Gamma(alpha+k+1))
        long double logc = lgammal(m + alpha + 1.0L) - lgammal(m - k + 1.0L) -
                           lgammal(alpha + k + 1.0L);
        long double term = expl(logc - lgammal(k + 1.0L)) * powl(static_cast<long double>(u), k);
        total += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(total);
}

// Unit-ball volume of the homogeneous norm via the Beta closed form
// (substitutions u = x^2, u = sin(theta) reduce the slice integral).
inline double omega_closed_form(double alpha) {
    return std::tgamma(0.5 * (alpha + 1.0)) /
           (8.0 * std::sqrt(M_PI) * std::tgamma(alpha + 1.0) * std::tgamma(0.5 * (alpha + 4.0)));
}

// Transform of f = exp(-x^2/2 - t^2/2) at alpha = 0: the t-integral is
// the classical Gaussian Fourier transform and the x-integral is a
// Laplace transform of L_m.
inline double gaussian_hat(double lambda, int m) {
    double al = std::abs(lambda);
    return std::sqrt(2.0 / M_PI) * std::exp(-0.5 * lambda * lambda) * std::pow(1.0 - al, m) /
           std::pow(1.0 + al, m + 1);
}

} // namespace oracles
