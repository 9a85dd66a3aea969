#include "laghyp/transform.hpp"

#include "laghyp/laguerre.hpp"
#include "laghyp/operators.hpp"
#include "laghyp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace laghyp {

SpectralFunction forward(const SampledFunction& f, std::shared_ptr<const DualGrid> dual,
                         const HypergroupContext& ctx) {
    const SpaceGrid& sg = *f.grid;
    const DualGrid& dg = *dual;
    SpectralFunction out;
    out.grid = dual;
    out.values.assign(dg.total_cells(), {0.0, 0.0});

    const size_t nx = sg.n_x(), nt = sg.n_t();
    std::vector<std::complex<double>> phase(nt);
    std::vector<std::complex<double>> tprofile(nx);
    std::vector<double> psi;

    for (size_t j = 0; j < dg.n_lambda(); ++j) {
        const double lam = dg.lambda_nodes[j];
        const double alam = std::abs(lam);
        for (size_t k = 0; k < nt; ++k) {
            // phi_(-lambda, m) carries e^{-i lambda t}
            const double a = -lam * sg.t_nodes[k];
            phase[k] = sg.t_weights[k] * std::complex<double>(std::cos(a), std::sin(a));
        }
        for (size_t i = 0; i < nx; ++i) {
            std::complex<double> acc{0.0, 0.0};
            const std::complex<double>* row = f.values.data() + i * nt;
            for (size_t k = 0; k < nt; ++k) acc += row[k] * phase[k];
            tprofile[i] = acc * sg.x_weights[i];
        }
        const int mc = dg.m_count[j];
        psi.resize(static_cast<size_t>(mc));
        std::complex<double>* cell = out.values.data() + dg.offsets[j];
        for (size_t i = 0; i < nx; ++i) {
            laguerre_psi_sweep(ctx.alpha, alam * sg.x_nodes[i] * sg.x_nodes[i], psi);
            const std::complex<double> c = tprofile[i];
            for (int m = 0; m < mc; ++m) cell[m] += psi[m] * c;
        }
    }
    return out;
}

SampledFunction inverse(const SpectralFunction& F, std::shared_ptr<const SpaceGrid> space,
                        const HypergroupContext& ctx, double* tail_fraction_out) {
    const DualGrid& dg = *F.grid;
    const SpaceGrid& sg = *space;
    if (tail_fraction_out) *tail_fraction_out = spectral_tail_fraction(F);

    SampledFunction out;
    out.grid = space;
    out.values.assign(sg.size(), {0.0, 0.0});

    const size_t nx = sg.n_x(), nt = sg.n_t();
    std::vector<double> psi;
    std::vector<std::complex<double>> A(nx);
    std::vector<std::complex<double>> phase(nt);

    for (size_t j = 0; j < dg.n_lambda(); ++j) {
        const double lam = dg.lambda_nodes[j];
        const double alam = std::abs(lam);
        const int mc = dg.m_count[j];
        psi.resize(static_cast<size_t>(mc));
        const std::complex<double>* cell = F.values.data() + dg.offsets[j];
        for (size_t i = 0; i < nx; ++i) {
            laguerre_psi_sweep(ctx.alpha, alam * sg.x_nodes[i] * sg.x_nodes[i], psi);
            std::complex<double> acc{0.0, 0.0};
            for (int m = 0; m < mc; ++m) acc += cell[m] * (dg.lm0[m] * psi[m]);
            A[i] = acc * dg.lambda_weights[j];
        }
        for (size_t k = 0; k < nt; ++k) {
            const double a = lam * sg.t_nodes[k];
            phase[k] = std::complex<double>(std::cos(a), std::sin(a));
        }
        for (size_t i = 0; i < nx; ++i) {
            std::complex<double>* row = out.values.data() + i * nt;
            const std::complex<double> Ai = A[i];
            for (size_t k = 0; k < nt; ++k) row[k] += Ai * phase[k];
        }
    }
    return out;
}

double plancherel_defect(const SampledFunction& f, const SpectralFunction& fhat) {
    double a = lp_norm_space(f, 2.0);
    if (a == 0.0) throw std::domain_error("plancherel_defect: ||f||_2 = 0");
    double b = lp_norm_dual(fhat, 2.0);
    return std::abs(a - b) / a;
}

double plancherel_defect(const SampledFunction& f, std::shared_ptr<const DualGrid> dual,
                         const HypergroupContext& ctx) {
    return plancherel_defect(f, forward(f, dual, ctx));
}

double hausdorff_young_ratio(const SampledFunction& f, double p, const SpectralFunction& fhat) {
    if (!(p >= 1.0 && p <= 2.0))
        throw std::domain_error("hausdorff_young_ratio: requires 1 <= p <= 2");
    double denom = lp_norm_space(f, p);
    if (denom == 0.0) throw std::domain_error("hausdorff_young_ratio: ||f||_p = 0");
    double pp = (p == 1.0) ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
    return lp_norm_dual(fhat, pp) / denom;
}

double hausdorff_young_ratio(const SampledFunction& f, double p,
                             std::shared_ptr<const DualGrid> dual, const HypergroupContext& ctx) {
    return hausdorff_young_ratio(f, p, forward(f, dual, ctx));
}

std::optional<std::complex<double>> interp_dual(const SpectralFunction& F, double lambda, int m) {
    const DualGrid& g = *F.grid;
    const double alam = std::abs(lambda);
    if (alam > g.lambda_max || alam <= 0.0) return std::nullopt;
    const size_t nh = g.n_lambda() / 2;
    // positive-half panel containing |lambda|
    auto it = std::upper_bound(g.lambda_breaks.begin(), g.lambda_breaks.end(), alam);
    size_t p = static_cast<size_t>(std::distance(g.lambda_breaks.begin(), it));
    if (p == 0) p = 1;
    if (p >= g.lambda_breaks.size()) p = g.lambda_breaks.size() - 1;
    const size_t q0 = (p - 1) * static_cast<size_t>(g.order);
    const bool negative = lambda < 0.0;
    std::vector<double> xs(static_cast<size_t>(g.order));
    std::vector<std::complex<double>> ys(static_cast<size_t>(g.order));
    for (int i = 0; i < g.order; ++i) {
        size_t q = q0 + static_cast<size_t>(i);
        size_t full = negative ? (nh - 1 - q) : (nh + q);
        if (m >= g.m_count[full]) return std::nullopt;
        xs[i] = std::abs(g.lambda_nodes[full]);
        ys[i] = F.values[g.cell(full, m)];
    }
    // barycentric on the panel nodes
    std::complex<double> num{0.0, 0.0};
    double den = 0.0;
    for (int i = 0; i < g.order; ++i) {
        double w = 1.0;
        for (int k = 0; k < g.order; ++k)
            if (k != i) w /= (xs[i] - xs[k]);
        double d = alam - xs[i];
        if (std::abs(d) < 1e-300) return ys[i];
        num += (w / d) * ys[i];
        den += w / d;
    }
    return num / den;
}

DilationDefect dilation_identity_defect(const SampledFunction& f, double r,
                                        std::shared_ptr<const DualGrid> dual,
                                        const HypergroupContext& ctx) {
    if (!(r > 0.0)) throw std::domain_error("dilation_identity_defect: r must be > 0");
    DilationDefect out;
    SampledFunction g = dilate(f, r, ctx);
    out.l1_defect = std::abs(lp_norm_space(g, 1.0) - lp_norm_space(f, 1.0)) / lp_norm_space(f, 1.0);
    SpectralFunction G = forward(g, dual, ctx);
    SpectralFunction F = forward(f, dual, ctx);
    const DualGrid& dg = *dual;
    const double r2 = r * r;
    // node spacing of the panel holding |lambda'|; fhat(., m) varies on
    // a lambda scale ~ (1 + lambda^2/4)/m for the catalog's decay rates,
    // so the comparison skips cells the panel interpolation cannot
    // represent
    auto spacing_at = [&](double alam) {
        auto it = std::upper_bound(dg.lambda_breaks.begin(), dg.lambda_breaks.end(), alam);
        size_t p = std::clamp<size_t>(std::distance(dg.lambda_breaks.begin(), it), 1,
                                      dg.lambda_breaks.size() - 1);
        return (dg.lambda_breaks[p] - dg.lambda_breaks[p - 1]) / dg.order;
    };
    for (size_t j = 0; j < dg.n_lambda(); ++j) {
        const double target = r2 * dg.lambda_nodes[j];
        const double alam = std::abs(target);
        if (alam > dg.lambda_max || alam <= 0.0) continue;
        const double s = spacing_at(alam);
        for (int m = 0; m < dg.m_count[j]; ++m) {
            if (m * s > 0.35 * (1.0 + 0.25 * alam * alam)) break;
            auto ref = interp_dual(F, target, m);
            if (!ref) continue;
            ++out.compared_cells;
            out.spectral_max =
                std::max(out.spectral_max, std::abs(G.values[dg.cell(j, m)] - *ref));
        }
    }
    return out;
}

} // namespace laghyp
