#include "laghyp/laguerre.hpp"

#include "laghyp/hypergroup.hpp"
#include "laghyp/stencil.hpp"

#include <cmath>
#include <stdexcept>

namespace laghyp {

double laguerre_poly(int m, double alpha, double u) {
    if (m < 0) throw std::invalid_argument("laguerre_poly: m must be >= 0");
    double p0 = 1.0;
    if (m == 0) return p0;
    double p1 = 1.0 + alpha - u;
    for (int k = 1; k < m; ++k) {
        double p2 = ((2.0 * k + 1.0 + alpha - u) * p1 - (k + alpha) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double log_laguerre_at_zero(int m, double alpha) {
    if (m < 0) throw std::invalid_argument("laguerre_at_zero: m must be >= 0");
    return std::lgamma(m + alpha + 1.0) - std::lgamma(m + 1.0) - std::lgamma(alpha + 1.0);
}

double laguerre_at_zero(int m, double alpha) { return std::exp(log_laguerre_at_zero(m, alpha)); }

std::vector<double> laguerre_zero_table(double alpha, int count) {
    std::vector<double> table(static_cast<size_t>(std::max(count, 0)));
    if (count <= 0) return table;
    table[0] = 1.0;
    for (int m = 0; m + 1 < count; ++m) table[m + 1] = table[m] * (m + 1.0 + alpha) / (m + 1.0);
    return table;
}

void laguerre_psi_sweep(double alpha, double u, std::span<double> out) {
    const size_t n = out.size();
    if (n == 0) return;
    // psi_m(u) = (m! Gamma(a+1)/Gamma(m+a+1)) e^{-u/2} L_m^a(u); the
    // normalized recurrence keeps every intermediate in [-1, 1].
    double p0 = std::exp(-0.5 * u);
    out[0] = p0;
    if (n == 1) return;
    double p1 = p0 * (1.0 + alpha - u) / (1.0 + alpha);
    out[1] = p1;
    for (size_t m = 1; m + 1 < n; ++m) {
        double p2 = ((2.0 * m + 1.0 + alpha - u) * p1 - static_cast<double>(m) * p0) /
                    (static_cast<double>(m) + alpha + 1.0);
        p0 = p1;
        p1 = p2;
        out[m + 1] = p2;
    }
}

std::complex<double> phi(const DualPoint& q, const SpacePoint& p, const HypergroupContext& ctx) {
    const double u = std::abs(q.lambda) * p.x * p.x;
    double psi[1];
    if (q.m == 0) {
        psi[0] = std::exp(-0.5 * u);
    } else {
        std::vector<double> sweep(static_cast<size_t>(q.m) + 1);
        laguerre_psi_sweep(ctx.alpha, u, sweep);
        psi[0] = sweep.back();
    }
    const double phase = q.lambda * p.t;
    return std::complex<double>(std::cos(phase), std::sin(phase)) * psi[0];
}

double eigen_residual(const DualPoint& q, const HypergroupContext& ctx, const FdConfig& fd) {
    if (q.lambda == 0.0) throw std::invalid_argument("eigen_residual: lambda must be nonzero");
    if (q.m < 0) throw std::invalid_argument("eigen_residual: m must be >= 0");
    const double nu = dual_norm(q, ctx);
    ComplexField field = [&](double x, double t) {
        return phi(q, SpacePoint{std::abs(x), t}, ctx);
    };
    // probes kept away from x=0; the singular term there is handled by
    // sublaplacian_at but the residual bound is stated off-axis
    const double xs[] = {0.3, 0.7, 1.1, 1.7};
    const double ts[] = {-0.8, 0.1, 0.9};
    double worst = 0.0;
    for (double x : xs) {
        for (double t : ts) {
            std::complex<double> lhs = sublaplacian_at(field, x, t, ctx.alpha, fd.order, fd.h);
            std::complex<double> rhs = nu * phi(q, SpacePoint{x, t}, ctx);
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(nu)));
        }
    }
    return worst;
}

} // namespace laghyp
