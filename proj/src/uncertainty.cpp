#include "laghyp/uncertainty.hpp"

#include "laghyp/operators.hpp"
#include "laghyp/quadrature.hpp"
#include "laghyp/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace laghyp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double conjugate_exponent(double p) { return (p == 1.0) ? kInf : p / (p - 1.0); }
} // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T15: return "T15";
    case TheoremId::T16: return "T16";
    case TheoremId::T17: return "T17";
    case TheoremId::T18: return "T18";
    }
    return "?";
}

bool hpw_admissible(TheoremId id, double p, double a, double b, const HypergroupContext& ctx) {
    if (!(a > 0.0) || !(b > 0.0)) return false;
    const double gap = ctx.Q * (1.0 / p - 0.5);
    switch (id) {
    case TheoremId::T15: return p >= 1.0 && p < 2.0 && b > gap;
    case TheoremId::T16: return p >= 2.0 && a < ctx.Q / p && b < 4.0;
    case TheoremId::T17: return p == 2.0;
    case TheoremId::T18: return p >= 1.0 && p <= 2.0 && b > gap;
    }
    return false;
}

HpwRecord hpw_ratio(const SampledFunction& f, const SpectralFunction& fhat, double p, double a,
                    double b, const HypergroupContext& ctx, TheoremId theorem) {
    if (!(p >= 1.0)) throw std::domain_error("hpw_ratio: p must be >= 1");
    HpwRecord rec;
    rec.p = p;
    rec.a = a;
    rec.b = b;
    rec.theorem = theorem;
    rec.admissible = hpw_admissible(theorem, p, a, b, ctx);
    const double pp = conjugate_exponent(p);
    if (theorem == TheoremId::T16) {
        rec.norm_p = lp_norm_dual(fhat, p);
        rec.wnorm_space = lp_norm_space(f, pp, a);
        rec.wnorm_dual = lp_norm_dual(fhat, p, 0.5 * b);
    } else {
        rec.norm_p = lp_norm_space(f, p);
        rec.wnorm_space = lp_norm_space(f, p, a);
        rec.wnorm_dual = lp_norm_dual(fhat, pp, 0.5 * b);
    }
    if (rec.norm_p == 0.0) throw std::domain_error("hpw_ratio: zero function");
    rec.lhs = std::pow(rec.norm_p, a + b);
    rec.rhs = std::pow(rec.wnorm_space, b) * std::pow(rec.wnorm_dual, a);
    rec.ratio = rec.rhs / rec.lhs;
    return rec;
}

double scale_invariance_defect(const SampledFunction& f, double p, double a, double b, double c,
                               double r, std::shared_ptr<const DualGrid> dual,
                               const HypergroupContext& ctx) {
    if (!(c > 0.0) || !(r > 0.0))
        throw std::domain_error("scale_invariance_defect: c, r must be > 0");
    SpectralFunction fhat = forward(f, dual, ctx);
    HpwRecord base = hpw_ratio(f, fhat, p, a, b, ctx, TheoremId::T18);
    SampledFunction g = dilate(f, r, ctx);
    for (auto& v : g.values) v *= c;
    SpectralFunction ghat = forward(g, dual, ctx);
    HpwRecord scaled = hpw_ratio(g, ghat, p, a, b, ctx, TheoremId::T18);
    return std::abs(scaled.ratio - base.ratio) / base.ratio;
}

Case1Constant case1_constant(double a, double b, const HypergroupContext& ctx) {
    if (!(a > 0.0)) throw std::domain_error("case1_constant: requires a > 0");
    if (!(b > 0.5 * ctx.Q)) throw std::domain_error("case1_constant: requires b > Q/2");
    Case1Constant out;
    out.s0 = std::pow(2.0, 1.0 / a); // 1 - s0^-a = 1/2
    const double P = 0.25 / (std::pow(out.s0, ctx.Q) * ctx.omega_alpha);
    out.plancherel_bound = P;
    const double e = b - ctx.alpha - 2.0; // b - Q/2 > 0
    // tail(r1) = (2 S / e) r1^-e = P/2
    out.r1 = std::pow(2.0 * ctx.series_constant / e * 2.0 / P, 1.0 / e);
    // gamma(E_r2) = P/4
    out.r2 = std::pow(P / 4.0 * (ctx.alpha + 2.0) / (2.0 * ctx.series_constant),
                      1.0 / (ctx.alpha + 2.0));
    out.value = std::pow(out.r2, 0.5 * b) * P / (4.0 * dual_ball_volume(out.r1, ctx));
    return out;
}

Case2Constant case2_constant(double a, double b, double p, const HypergroupContext& ctx) {
    if (!(a > 0.0)) throw std::domain_error("case2_constant: requires a > 0");
    if (!(p > 1.0 && p < 2.0)) throw std::domain_error("case2_constant: requires 1 < p < 2");
    const double gap = ctx.Q * (1.0 / p - 0.5);
    if (!(b > gap)) throw std::domain_error("case2_constant: requires b > Q(1/p - 1/2)");
    Case2Constant out;
    const double pp = p / (p - 1.0);
    out.s0 = std::pow(2.0, 1.0 / (a * p)); // 1 - s0^(-ap) = 1/2
    const double P2 = std::pow(0.5, 2.0 / p) *
                      std::pow(std::pow(out.s0, ctx.Q) * ctx.omega_alpha, 1.0 - 2.0 / p);
    out.kept_mass = P2;
    const double c_exp = b * pp / (pp - 2.0);
    const double e = c_exp - ctx.alpha - 2.0; // > 0 by the hypothesis
    const double I3_target = std::pow(0.5 * P2, pp / (pp - 2.0));
    out.r1 = std::pow(2.0 * ctx.series_constant / (e * I3_target), 1.0 / e);
    const double ball_target = std::pow(0.25 * P2, pp / (pp - 2.0));
    out.r2 = std::pow(ball_target * (ctx.alpha + 2.0) / (2.0 * ctx.series_constant),
                      1.0 / (ctx.alpha + 2.0));
    const double gamma_r1 = dual_ball_volume(out.r1, ctx);
    out.value = std::pow(std::pow(out.r2, 0.5 * b * pp) * std::pow(0.25 * P2, 0.5 * pp) *
                             std::pow(gamma_r1, 0.5 * (2.0 - pp)),
                         1.0 / pp);
    return out;
}

double normalized_dual_norm(const SampledFunction& f, const SpectralFunction& fhat, double a,
                            double b, double p, const HypergroupContext& ctx) {
    (void)ctx;
    const double pp = conjugate_exponent(p);
    const double np = lp_norm_space(f, p);
    const double wa = lp_norm_space(f, p, a);
    if (np == 0.0 || wa == 0.0) throw std::domain_error("normalized_dual_norm: zero norm");
    const double r = std::pow(np / wa, 1.0 / a);
    return lp_norm_dual(fhat, pp, 0.5 * b) / (np * std::pow(r, b));
}

MainLemReport mainlem_bound_check(const SampledFunction& f, const SpectralFunction& fhat, double p,
                                  double b, double r, const HypergroupContext& ctx) {
    if (!(p > 1.0 && p < 2.0)) throw std::domain_error("mainlem_bound_check: requires 1 < p < 2");
    const double gap = ctx.Q * (1.0 / p - 0.5);
    if (!(b > gap)) throw std::domain_error("mainlem_bound_check: requires b > Q(1/p - 1/2)");
    if (!(r > 0.0)) throw std::domain_error("mainlem_bound_check: requires r > 0");
    (void)f;
    MainLemReport rep;
    const DualGrid& g = *fhat.grid;
    std::vector<double> in_acc(g.n_lambda()), out_acc(g.n_lambda());
    for (size_t j = 0; j < g.n_lambda(); ++j) {
        double a_in = 0.0, a_out = 0.0;
        for (int m = 0; m < g.m_count[j]; ++m) {
            double v = g.lm0[m] * std::norm(fhat.values[g.cell(j, m)]);
            if (g.nu(j, m) < r)
                a_in += v;
            else
                a_out += v;
        }
        in_acc[j] = g.lambda_weights[j] * a_in;
        out_acc[j] = g.lambda_weights[j] * a_out;
    }
    rep.I1 = tree_sum(in_acc);
    rep.I2 = tree_sum(out_acc);
    const double pp = p / (p - 1.0);
    rep.I3 = dual_tail_integral(b * pp / (pp - 2.0), r, ctx);
    rep.gamma_Er = dual_ball_volume(r, ctx);
    const double np_dual = lp_norm_dual(fhat, pp);
    const double wb_dual = lp_norm_dual(fhat, pp, 0.5 * b);
    rep.holder1_rhs = np_dual * np_dual * std::pow(rep.gamma_Er, 1.0 - 2.0 / pp);
    rep.holder2_rhs = wb_dual * wb_dual * std::pow(rep.I3, 1.0 - 2.0 / pp);
    rep.slack1 = rep.I1 > 0.0 ? rep.holder1_rhs / rep.I1 : kInf;
    rep.slack2 = rep.I2 > 0.0 ? rep.holder2_rhs / rep.I2 : kInf;
    rep.ok = rep.slack1 >= 1.0 - 1e-12 && rep.slack2 >= 1.0 - 1e-12;
    return rep;
}

double gs_norm(double s, double p, const HypergroupContext& ctx) {
    if (!(s > 0.0)) throw std::domain_error("gs_norm: s must be > 0");
    if (!(p >= 1.0)) throw std::domain_error("gs_norm: p must be >= 1");
    const double q4 = 0.25 * ctx.Q;
    double pth = std::pow(s, -q4) / std::pow(p, q4) * std::tgamma(q4) * ctx.series_constant;
    return std::pow(pth, 1.0 / p);
}

SpectralFunction gs_spectral(double s, std::shared_ptr<const DualGrid> dual) {
    if (!(s > 0.0)) throw std::domain_error("gs_spectral: s must be > 0");
    const DualGrid& g = *dual;
    SpectralFunction F;
    F.grid = dual;
    F.values.resize(g.total_cells());
    for (size_t j = 0; j < g.n_lambda(); ++j)
        for (int m = 0; m < g.m_count[j]; ++m) {
            double nu = g.nu(j, m);
            F.values[g.cell(j, m)] = std::exp(-s * nu * nu);
        }
    return F;
}

Ineq332Report ineq332_check(const SampledFunction& f, const SpectralFunction& fhat, double a,
                            double p, std::span<const double> s_values,
                            const HypergroupContext& ctx) {
    if (!(p >= 2.0)) throw std::domain_error("ineq332_check: requires p >= 2");
    if (!(a > 0.0 && a < ctx.Q / p)) throw std::domain_error("ineq332_check: requires 0 < a < Q/p");
    const double pp = conjugate_exponent(p);
    const double wa = lp_norm_space(f, pp, a);
    if (wa == 0.0) throw std::domain_error("ineq332_check: zero weighted norm");
    Ineq332Report rep;
    const DualGrid& g = *fhat.grid;
    for (double s : s_values) {
        SpectralFunction prod;
        prod.grid = fhat.grid;
        prod.values.resize(g.total_cells());
        for (size_t j = 0; j < g.n_lambda(); ++j)
            for (int m = 0; m < g.m_count[j]; ++m) {
                double nu = g.nu(j, m);
                prod.values[g.cell(j, m)] = std::exp(-s * nu * nu) * fhat.values[g.cell(j, m)];
            }
        double gn = lp_norm_dual(prod, p);
        rep.s_values.push_back(s);
        rep.gs_norms.push_back(gn);
        rep.K.push_back(gn * std::pow(s, 0.25 * a) / wa);
    }
    // least-squares log-log slope
    const size_t n = rep.s_values.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) {
            double x = std::log(rep.s_values[i]), y = std::log(rep.gs_norms[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    std::vector<double> sorted = rep.K;
    std::sort(sorted.begin(), sorted.end());
    rep.K_median = sorted[sorted.size() / 2];
    double kmax = sorted.back(), kmin = sorted.front();
    rep.K_spread = std::max(kmax / rep.K_median, rep.K_median / std::max(kmin, 1e-300));
    return rep;
}

double optimal_s(double a, double b, double n_space, double n_dual) {
    if (!(a > 0.0 && b > 0.0 && n_space > 0.0 && n_dual > 0.0))
        throw std::domain_error("optimal_s: all inputs must be > 0");
    return std::pow(a * n_space / (b * n_dual), 4.0 / (a + b));
}

ElementaryBoundReport elementary_bound_check(double b) {
    if (!(b > 0.0 && b < 4.0)) throw std::domain_error("elementary_bound_check: requires 0 < b < 4");
    ElementaryBoundReport rep;
    const int n = 4096;
    const double lo = std::log(1e-12), hi = std::log(1e6);
    for (int i = 0; i <= n; ++i) {
        double z = std::exp(lo + (hi - lo) * i / n);
        double v = std::pow(z, -0.25 * b) * (-std::expm1(-z));
        rep.sup = std::max(rep.sup, v);
    }
    rep.ok = rep.sup <= 1.0 + 1e-12;
    return rep;
}

} // namespace laghyp
