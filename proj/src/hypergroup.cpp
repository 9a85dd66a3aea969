#include "laghyp/hypergroup.hpp"

#include "laghyp/laguerre.hpp"
#include "laghyp/quadrature.hpp"

#include <cmath>

namespace laghyp {

namespace {

// Smooth real-argument extension of the S_alpha summand.
double series_term(double x, double alpha) {
    double lg = std::lgamma(x + alpha + 1.0) - std::lgamma(x + 1.0) - std::lgamma(alpha + 1.0);
    return std::exp(lg) * std::pow(4.0 * x + 2.0 * alpha + 2.0, -(alpha + 2.0));
}

// Euler-Maclaurin tail sum_{m >= m0} f(m) for a smooth f decaying like
// m^-2: integral (via the 1/x substitution) + f/2 - f'/12 + f'''/720.
// Returns the tail and an error bound dominated by the next correction.
struct EmTail {
    double value;
    double bound;
};

EmTail em_tail(const std::function<double(double)>& f, double x0) {
    const QuadRule rule = gauss_legendre(32, 0.0, 1.0);
    std::vector<double> vals(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double u = rule.nodes[i];
        vals[i] = rule.weights[i] * f(x0 / u) * x0 / (u * u);
    }
    double integral = tree_sum(vals);
    const double h = 0.5;
    double f0 = f(x0);
    double d1 = (f(x0 + h) - f(x0 - h)) / (2.0 * h);
    double d3 = (f(x0 + 2.0 * h) - 2.0 * f(x0 + h) + 2.0 * f(x0 - h) - f(x0 - 2.0 * h)) /
                (2.0 * h * h * h);
    double tail = integral + 0.5 * f0 - d1 / 12.0 + d3 / 720.0;
    // remainder after the f'''/720 term, with headroom for the numeric
    // derivatives and the integral quadrature
    double bound = 4.0 * std::abs(d3) / 720.0 + 1e-13 * std::abs(integral) + 1e-300;
    return {tail, bound};
}

SeriesValue compute_series(double alpha, int m_max, double rel_tol) {
    SeriesValue out;
    out.m_used = m_max;
    std::vector<double> terms(static_cast<size_t>(m_max) + 1);
    double L = 1.0; // L_0^alpha(0)
    for (int m = 0; m <= m_max; ++m) {
        terms[m] = L * std::pow(4.0 * m + 2.0 * alpha + 2.0, -(alpha + 2.0));
        L *= (m + 1.0 + alpha) / (m + 1.0);
    }
    out.partial = tree_sum(terms);
    EmTail tail = em_tail([alpha](double x) { return series_term(x, alpha); },
                          static_cast<double>(m_max) + 1.0);
    out.tail_correction = tail.value;
    out.value = out.partial + tail.value;
    out.tail_bound = tail.bound;
    out.converged = out.tail_bound < rel_tol * out.value;
    return out;
}

} // namespace

HypergroupContext HypergroupContext::make(double alpha, double rel_tol, int m_max_series) {
    if (alpha < 0.0) throw std::domain_error("HypergroupContext: alpha must be >= 0");
    if (m_max_series < 8) throw std::domain_error("HypergroupContext: m_max_series too small");
    HypergroupContext ctx;
    ctx.alpha = alpha;
    ctx.Q = 2.0 * alpha + 4.0;
    ctx.rel_tol = rel_tol;
    ctx.m_max_series = m_max_series;
    ctx.series_detail = compute_series(alpha, m_max_series, rel_tol);
    if (!ctx.series_detail.converged)
        throw std::domain_error("HypergroupContext: series truncation order insufficient for rel_tol");
    ctx.series_constant = ctx.series_detail.value;
    ctx.omega_alpha = ball_region_integral(0.0, 1.0, alpha, std::min(rel_tol, 1e-12));
    if (!(ctx.omega_alpha > 0.0) || !(ctx.series_constant > 0.0))
        throw std::runtime_error("HypergroupContext: derived constants must be positive");
    return ctx;
}

double homogeneous_norm(const SpacePoint& p) {
    const double x2 = p.x * p.x;
    return std::pow(x2 * x2 + 4.0 * p.t * p.t, 0.25);
}

double dual_norm(const DualPoint& q, const HypergroupContext& ctx) {
    return 4.0 * std::abs(q.lambda) * (q.m + 0.5 * (ctx.alpha + 1.0));
}

double space_density(const SpacePoint& p, const HypergroupContext& ctx) {
    return std::pow(p.x, 2.0 * ctx.alpha + 1.0) / (M_PI * std::tgamma(ctx.alpha + 1.0));
}

double plancherel_weight(const DualPoint& q, const HypergroupContext& ctx) {
    return laguerre_at_zero(q.m, ctx.alpha) * std::pow(std::abs(q.lambda), ctx.alpha + 1.0);
}

double unit_ball_volume(const HypergroupContext& ctx) { return ctx.omega_alpha; }

SeriesValue series_constant(const HypergroupContext& ctx) { return ctx.series_detail; }

double series_partial_sum(double alpha, int m_max) {
    std::vector<double> terms(static_cast<size_t>(m_max) + 1);
    double L = 1.0;
    for (int m = 0; m <= m_max; ++m) {
        terms[m] = L * std::pow(4.0 * m + 2.0 * alpha + 2.0, -(alpha + 2.0));
        L *= (m + 1.0 + alpha) / (m + 1.0);
    }
    return tree_sum(terms);
}

double dual_ball_volume(double r, const HypergroupContext& ctx) {
    if (!(r > 0.0)) throw std::domain_error("dual_ball_volume: r must be > 0");
    return 2.0 * std::pow(r, ctx.alpha + 2.0) / (ctx.alpha + 2.0) * ctx.series_constant;
}

double space_ball_moment(double c, double r, const HypergroupContext& ctx) {
    if (!(r > 0.0)) throw std::domain_error("space_ball_moment: r must be > 0");
    if (c >= ctx.Q)
        throw DivergentIntegralError("space_ball_moment: requires c < Q (divergent integral)");
    return ctx.Q * ctx.omega_alpha / (ctx.Q - c) * std::pow(r, ctx.Q - c);
}

double dual_tail_integral(double c, double r, const HypergroupContext& ctx) {
    if (!(r > 0.0)) throw std::domain_error("dual_tail_integral: r must be > 0");
    if (c <= ctx.alpha + 2.0)
        throw DivergentIntegralError("dual_tail_integral: requires c > alpha + 2 (divergent integral)");
    const double e = c - ctx.alpha - 2.0;
    return 2.0 / e * std::pow(r, -e) * ctx.series_constant;
}

double ball_region_integral(double c, double r, double alpha, double rel_tol) {
    if (!(r > 0.0)) throw std::domain_error("ball_region_integral: r must be > 0");
    const double Q = 2.0 * alpha + 4.0;
    if (c >= Q) throw DivergentIntegralError("ball_region_integral: requires c < Q");
    const double norm = 1.0 / (M_PI * std::tgamma(alpha + 1.0));
    const double r4 = r * r * r * r;
    auto outer = [&](double x) {
        const double x4 = x * x * x * x;
        const double T = 0.5 * std::sqrt(std::max(r4 - x4, 0.0));
        if (T <= 0.0) return 0.0;
        double inner;
        if (c == 0.0) {
            inner = T;
        } else {
            inner = adaptive_integrate(
                [&](double t) { return std::pow(x4 + 4.0 * t * t, -0.25 * c); }, 0.0, T,
                std::max(rel_tol * 0.1, 1e-13), /*grade_left=*/true, /*grade_right=*/false);
        }
        return std::pow(x, 2.0 * alpha + 1.0) * inner;
    };
    double half = adaptive_integrate(outer, 0.0, r, rel_tol, /*grade_left=*/true, /*grade_right=*/true);
    return 2.0 * norm * half; // t-symmetry
}

double dual_ball_bruteforce(double r, const HypergroupContext& ctx) {
    if (!(r > 0.0)) throw std::domain_error("dual_ball_bruteforce: r must be > 0");
    const double alpha = ctx.alpha;
    const int m_direct = 256;
    const QuadRule base = gauss_legendre(24);
    std::vector<double> partials(m_direct + 1);
    double L = 1.0;
    for (int m = 0; m <= m_direct; ++m) {
        const double rm = r / (4.0 * m + 2.0 * alpha + 2.0);
        // int_0^rm lambda^(alpha+1) dlambda with grading toward 0
        double acc = 0.0;
        double lo = 0.0;
        const int levels = 8;
        for (int lev = levels; lev >= 1; --lev) {
            double hi = rm * std::pow(2.0, -(lev - 1));
            double xm = 0.5 * (hi + lo), xl = 0.5 * (hi - lo);
            for (size_t i = 0; i < base.nodes.size(); ++i) {
                double lam = xm + xl * base.nodes[i];
                acc += xl * base.weights[i] * std::pow(lam, alpha + 1.0);
            }
            lo = hi;
        }
        partials[m] = 2.0 * L * acc;
        L *= (m + 1.0 + alpha) / (m + 1.0);
    }
    double direct = tree_sum(partials);
    auto term = [&](double x) {
        double lg = std::lgamma(x + alpha + 1.0) - std::lgamma(x + 1.0) - std::lgamma(alpha + 1.0);
        double rm = r / (4.0 * x + 2.0 * alpha + 2.0);
        return 2.0 * std::exp(lg) * std::pow(rm, alpha + 2.0) / (alpha + 2.0);
    };
    EmTail tail = em_tail(term, static_cast<double>(m_direct) + 1.0);
    return direct + tail.value;
}

double dual_tail_bruteforce(double c, double r, const HypergroupContext& ctx) {
    if (c <= ctx.alpha + 2.0)
        throw DivergentIntegralError("dual_tail_bruteforce: requires c > alpha + 2");
    const double alpha = ctx.alpha;
    const int m_direct = 256;
    const QuadRule base = gauss_legendre(24);
    const double p = alpha + 1.0 - c; // lambda exponent, p < -1
    std::vector<double> partials(m_direct + 1);
    double L = 1.0;
    for (int m = 0; m <= m_direct; ++m) {
        const double denom = 4.0 * m + 2.0 * alpha + 2.0;
        const double rm = r / denom;
        // numeric over [rm, 64 rm] in octave panels, elementary power tail beyond
        double acc = 0.0;
        double lo = rm;
        for (int oct = 0; oct < 6; ++oct) {
            double hi = lo * 2.0;
            double xm = 0.5 * (hi + lo), xl = 0.5 * (hi - lo);
            for (size_t i = 0; i < base.nodes.size(); ++i) {
                double lam = xm + xl * base.nodes[i];
                acc += xl * base.weights[i] * std::pow(lam, p);
            }
            lo = hi;
        }
        acc += -std::pow(lo, p + 1.0) / (p + 1.0); // exact remainder of the pure power
        partials[m] = 2.0 * L * std::pow(denom, -c) * acc;
        L *= (m + 1.0 + alpha) / (m + 1.0);
    }
    double direct = tree_sum(partials);
    auto term = [&](double x) {
        double lg = std::lgamma(x + alpha + 1.0) - std::lgamma(x + 1.0) - std::lgamma(alpha + 1.0);
        double denom = 4.0 * x + 2.0 * alpha + 2.0;
        double rm = r / denom;
        // closed per-m value: 2 L(0) denom^-c rm^(p+1)/(-(p+1))
        return 2.0 * std::exp(lg) * std::pow(denom, -c) * std::pow(rm, p + 1.0) / (-(p + 1.0));
    };
    EmTail tail = em_tail(term, static_cast<double>(m_direct) + 1.0);
    return direct + tail.value;
}

} // namespace laghyp
