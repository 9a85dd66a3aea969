#include "laghyp/grid.hpp"

#include "laghyp/laguerre.hpp"
#include "laghyp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace laghyp {

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

// Barycentric weights for a node set (reference interval).
std::vector<double> barycentric_weights(std::span<const double> nodes) {
    const size_t n = nodes.size();
    std::vector<double> w(n, 1.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (j != i) w[i] /= (nodes[i] - nodes[j]);
    return w;
}

// Panel index for a query in [breaks.front(), breaks.back()].
size_t find_panel(std::span<const double> breaks, double v) {
    auto it = std::upper_bound(breaks.begin(), breaks.end(), v);
    size_t p = static_cast<size_t>(std::distance(breaks.begin(), it));
    if (p == 0) return 0;
    if (p >= breaks.size()) return breaks.size() - 2;
    return p - 1;
}

// Interpolation coefficients of the panel's nodes at reference coordinate s.
void bary_coeffs(std::span<const double> ref_nodes, std::span<const double> ref_w, double s,
                 std::span<double> out) {
    const size_t n = ref_nodes.size();
    for (size_t i = 0; i < n; ++i) {
        double d = s - ref_nodes[i];
        if (std::abs(d) < 1e-14) {
            for (size_t j = 0; j < n; ++j) out[j] = 0.0;
            out[i] = 1.0;
            return;
        }
        out[i] = ref_w[i] / d;
    }
    double denom = 0.0;
    for (size_t i = 0; i < n; ++i) denom += out[i];
    for (size_t i = 0; i < n; ++i) out[i] /= denom;
}

std::vector<double> space_x_breaks(double x_max, int n_x, double alpha) {
    const int order = 16;
    int panels = std::max(1, n_x / order);
    int deep = near_integer(2.0 * alpha + 1.0) ? 4 : 8;
    if (panels <= deep + 2) {
        // small budgets: plain power-2 stack
        return geometric_ladder(x_max, std::max(panels, 1));
    }
    // Self-similar ladder, finer near x_max: ratio 2^(1/4) on the outer
    // decade (the Laguerre sweep oscillates fastest there), sqrt(2) in
    // the middle, and a power-2 stack under x_max/32 for the x^(2a+1)
    // density. On each panel [A, qA] a Gaussian of any rescaled catalog
    // width varies by a bounded number of e-folds, which keeps panel
    // interpolation of dilated members accurate.
    std::vector<double> down;
    double a = x_max;
    while (a > x_max / 4.0 + 1e-12) {
        down.push_back(a);
        a /= std::pow(2.0, 0.25);
    }
    while (a > x_max / 32.0 + 1e-12) {
        down.push_back(a);
        a /= std::sqrt(2.0);
    }
    std::vector<double> br = geometric_ladder(a, deep);
    for (auto it = down.rbegin(); it != down.rend(); ++it) br.push_back(*it);
    return br;
}

double gaussian_selftest(const SpaceGrid& g) {
    // int e^{-x^2 - t^2} dm_alpha = 1/(2 sqrt(pi)) for every alpha
    std::vector<double> xs(g.n_x()), ts(g.n_t());
    for (size_t i = 0; i < g.n_x(); ++i)
        xs[i] = g.x_weights[i] * std::exp(-g.x_nodes[i] * g.x_nodes[i]);
    for (size_t k = 0; k < g.n_t(); ++k)
        ts[k] = g.t_weights[k] * std::exp(-g.t_nodes[k] * g.t_nodes[k]);
    double v = tree_sum(xs) * tree_sum(ts);
    double exact = 0.5 / std::sqrt(M_PI);
    return std::abs(v - exact) / exact;
}

double ball_indicator_selftest(const SpaceGrid& g, double omega) {
    std::vector<double> acc;
    acc.reserve(g.size());
    for (size_t i = 0; i < g.n_x(); ++i) {
        const double x4 = std::pow(g.x_nodes[i], 4.0);
        for (size_t k = 0; k < g.n_t(); ++k) {
            double inside = (x4 + 4.0 * g.t_nodes[k] * g.t_nodes[k] < 1.0) ? 1.0 : 0.0;
            acc.push_back(g.x_weights[i] * g.t_weights[k] * inside);
        }
    }
    return std::abs(tree_sum(acc) - omega) / omega;
}

} // namespace

std::shared_ptr<const SpaceGrid> build_space_grid(const HypergroupContext& ctx, double x_max,
                                                  double t_max, int n_x, int n_t) {
    if (!(x_max > 0.0) || !(t_max > 0.0))
        throw std::invalid_argument("build_space_grid: extents must be positive");
    if (n_x < 2 || n_t < 2) throw std::invalid_argument("build_space_grid: sizes too small");

    auto g = std::make_shared<SpaceGrid>();
    g->alpha = ctx.alpha;
    g->x_max = x_max;
    g->t_max = t_max;
    g->t_order = n_t >= 16 ? 16 : n_t;

    g->x_breaks = space_x_breaks(x_max, n_x, ctx.alpha);
    if (n_x < 16) g->x_breaks = {0.0, x_max};
    g->x_order =
        std::clamp<int>(n_x / static_cast<int>(g->x_breaks.size() - 1), 2, 64);
    QuadRule xr = composite_legendre(g->x_breaks, g->x_order);
    g->x_nodes = xr.nodes;
    g->x_weights.resize(xr.nodes.size());
    const double norm = 1.0 / (M_PI * std::tgamma(ctx.alpha + 1.0));
    for (size_t i = 0; i < xr.nodes.size(); ++i)
        g->x_weights[i] = xr.weights[i] * std::pow(xr.nodes[i], 2.0 * ctx.alpha + 1.0) * norm;

    // symmetric t layout: a graded stack near t = 0 (sharp sublevel-set
    // cuts and r^2-narrowed resamples live there), then uniform panels
    // wide enough to stay cheap but still resolving e^(i lambda t)
    // where catalog members are nonzero
    int t_panels = std::max(2, n_t / g->t_order);
    if (t_panels >= 16) {
        double w = t_max / std::max(2, t_panels / 2 - 4);
        std::vector<double> pos = {w / 8.0, w / 4.0, w / 2.0, w, 1.5 * w};
        for (double v = 2.0 * w; v < t_max - 1e-9; v += w) pos.push_back(v);
        pos.push_back(t_max);
        g->t_breaks.clear();
        for (auto it = pos.rbegin(); it != pos.rend(); ++it) g->t_breaks.push_back(-*it);
        g->t_breaks.push_back(0.0);
        for (double v : pos) g->t_breaks.push_back(v);
    } else {
        g->t_breaks = uniform_breakpoints(-t_max, t_max, t_panels);
    }
    QuadRule tr = composite_legendre(g->t_breaks, g->t_order);
    g->t_nodes = tr.nodes;
    g->t_weights = tr.weights;

    QuadRule ref = gauss_legendre(g->x_order);
    g->ref_nodes = ref.nodes;
    g->ref_bary = barycentric_weights(g->ref_nodes);

    g->gaussian_selftest_defect = gaussian_selftest(*g);
    if (g->gaussian_selftest_defect > 1e-6)
        throw GridResolutionError("space grid self-test failed (grid-resolution): Gaussian "
                                  "integral defect " +
                                      std::to_string(g->gaussian_selftest_defect),
                                  g->gaussian_selftest_defect);
    g->ball_indicator_defect = ball_indicator_selftest(*g, ctx.omega_alpha);
    if (g->ball_indicator_defect > 0.25)
        throw GridResolutionError("space grid self-test failed (grid-resolution): B_1 measure "
                                  "defect " +
                                      std::to_string(g->ball_indicator_defect),
                                  g->ball_indicator_defect);
    return g;
}

std::shared_ptr<const DualGrid> build_dual_grid(const HypergroupContext& ctx, double lambda_max,
                                                int n_lambda, int m_max, double nu_cap) {
    if (!(lambda_max > 0.0)) throw std::invalid_argument("build_dual_grid: lambda_max must be > 0");
    if (n_lambda < 2 || m_max < 16) throw std::invalid_argument("build_dual_grid: sizes too small");
    if (!(nu_cap > 0.0)) throw std::invalid_argument("build_dual_grid: nu_cap must be > 0");

    auto g = std::make_shared<DualGrid>();
    g->alpha = ctx.alpha;
    g->lambda_max = lambda_max;
    g->nu_cap = nu_cap;
    g->m_ceiling = m_max;

    // ladder shape: geometric stack into lambda = 0 (resolves the
    // |lambda|^(alpha+1) weight and the deep-m region), then uniform
    // panels of width <= 2 so e^(i lambda t) stays resolved at |t| up
    // to ~16 under inversion
    const double geo_top = std::min(1.0, lambda_max);
    int geo_levels = near_integer(ctx.alpha) ? 3 : 5;
    int uniform_panels =
        lambda_max > geo_top ? static_cast<int>(std::ceil((lambda_max - geo_top) / 2.0)) : 0;
    int panels = geo_levels + uniform_panels;
    g->order = std::max(4, n_lambda / panels);
    QuadRule ref = gauss_legendre(g->order);
    // keep the smallest node's nu coverage at least nu_cap/2 under the
    // m ceiling; merge the deepest geometric panels if necessary
    const double xi1 = 0.5 * (1.0 + ref.nodes[0]); // smallest node of a [0,1] panel
    while (geo_levels > 1) {
        double lam_min = geo_top * std::pow(2.0, -(geo_levels - 1)) * xi1;
        if (4.0 * lam_min * static_cast<double>(m_max) >= 0.5 * nu_cap) break;
        --geo_levels;
    }
    g->lambda_breaks = geometric_ladder(geo_top, geo_levels);
    for (int i = 1; i <= uniform_panels; ++i)
        g->lambda_breaks.push_back(geo_top +
                                   (lambda_max - geo_top) * static_cast<double>(i) / uniform_panels);
    QuadRule pos = composite_legendre(g->lambda_breaks, g->order);

    const size_t nh = pos.nodes.size();
    g->lambda_nodes.resize(2 * nh);
    g->lambda_weights.resize(2 * nh);
    for (size_t j = 0; j < nh; ++j) {
        // negatives first, descending magnitude -> ascending value
        g->lambda_nodes[j] = -pos.nodes[nh - 1 - j];
        g->lambda_nodes[nh + j] = pos.nodes[j];
    }
    for (size_t j = 0; j < 2 * nh; ++j) {
        double lam = g->lambda_nodes[j];
        size_t src = (j < nh) ? (nh - 1 - j) : (j - nh);
        g->lambda_weights[j] = pos.weights[src] * std::pow(std::abs(lam), ctx.alpha + 1.0);
    }

    g->m_count.resize(2 * nh);
    g->offsets.assign(2 * nh + 1, 0);
    int max_count = 0;
    for (size_t j = 0; j < 2 * nh; ++j) {
        double lam = std::abs(g->lambda_nodes[j]);
        double target = nu_cap / (4.0 * lam) - 0.5 * (ctx.alpha + 1.0);
        int count = 16;
        if (std::isfinite(target))
            count = std::max(16, static_cast<int>(std::floor(target)) + 2);
        count = std::min(count, m_max);
        g->m_count[j] = count;
        g->offsets[j + 1] = g->offsets[j] + static_cast<size_t>(count);
        max_count = std::max(max_count, count);
    }
    g->m_max_effective = max_count;
    g->lm0 = laguerre_zero_table(ctx.alpha, max_count);

    // self-test 1: quadrature of g_1 against the closed form
    {
        std::vector<double> acc(g->n_lambda());
        for (size_t j = 0; j < g->n_lambda(); ++j) {
            double cell = 0.0;
            for (int m = 0; m < g->m_count[j]; ++m) {
                double nu = g->nu(j, m);
                cell += g->lm0[m] * std::exp(-nu * nu);
            }
            acc[j] = g->lambda_weights[j] * cell;
        }
        double v = tree_sum(acc);
        double exact = std::tgamma(0.25 * ctx.Q) * ctx.series_constant;
        g->gs_selftest_defect = std::abs(v - exact) / exact;
        if (g->gs_selftest_defect > 1e-6)
            throw GridResolutionError(
                "dual grid self-test failed (grid-resolution): g_1 quadrature defect " +
                    std::to_string(g->gs_selftest_defect),
                g->gs_selftest_defect);
    }
    // self-test 2: gamma-measure of E_1
    {
        double v = dual_ball_measure_on_grid(*g, 1.0);
        double exact = dual_ball_volume(1.0, ctx);
        g->ball_selftest_defect = std::abs(v - exact) / exact;
        if (g->ball_selftest_defect > 1e-6)
            throw GridResolutionError(
                "dual grid self-test failed (grid-resolution): E_1 measure defect " +
                    std::to_string(g->ball_selftest_defect),
                g->ball_selftest_defect);
    }
    // eigenfunction bound |psi_m| <= 1 spot check on a few nodes
    {
        std::vector<double> sweep(static_cast<size_t>(std::min(max_count, 4096)));
        for (double u : {0.1, 1.7, 19.0, 240.0}) {
            laguerre_psi_sweep(ctx.alpha, u, sweep);
            for (double v : sweep)
                if (std::abs(v) > 1.0 + 1e-12)
                    throw GridResolutionError("dual grid self-test failed: |psi| bound violated",
                                              std::abs(v) - 1.0);
        }
    }
    return g;
}

SampledFunction sample(std::shared_ptr<const SpaceGrid> grid,
                       const std::function<std::complex<double>(double, double)>& fn) {
    SampledFunction f;
    f.grid = grid;
    f.values.resize(grid->size());
    for (size_t i = 0; i < grid->n_x(); ++i)
        for (size_t k = 0; k < grid->n_t(); ++k)
            f.values[grid->idx(i, k)] = fn(grid->x_nodes[i], grid->t_nodes[k]);
    return f;
}

double lp_norm_space(const SampledFunction& f, double p, double weight_exponent) {
    const SpaceGrid& g = *f.grid;
    if (p == std::numeric_limits<double>::infinity()) {
        double best = 0.0;
        for (size_t i = 0; i < g.n_x(); ++i)
            for (size_t k = 0; k < g.n_t(); ++k) {
                double w = weight_exponent == 0.0
                               ? 1.0
                               : std::pow(homogeneous_norm({g.x_nodes[i], g.t_nodes[k]}),
                                          weight_exponent);
                best = std::max(best, w * std::abs(f.values[g.idx(i, k)]));
            }
        return best;
    }
    if (!(p >= 1.0)) throw std::domain_error("lp_norm_space: p must be >= 1 or infinity");
    std::vector<double> acc(g.size());
    for (size_t i = 0; i < g.n_x(); ++i) {
        for (size_t k = 0; k < g.n_t(); ++k) {
            double w = weight_exponent == 0.0
                           ? 1.0
                           : std::pow(homogeneous_norm({g.x_nodes[i], g.t_nodes[k]}),
                                      weight_exponent);
            double v = w * std::abs(f.values[g.idx(i, k)]);
            acc[g.idx(i, k)] = g.x_weights[i] * g.t_weights[k] * std::pow(v, p);
        }
    }
    return std::pow(tree_sum(acc), 1.0 / p);
}

namespace {

// One-dimensional polynomial refinement of a sampled max along lambda.
// Fits a parabola through the argmax node and its same-panel neighbors;
// for the node nearest lambda = 0 extrapolates a cubic to the open end.
double refine_dual_sup(const SpectralFunction& F, double weight_exponent_half, double node_best,
                       size_t best_j, int best_m) {
    const DualGrid& g = *F.grid;
    auto value = [&](size_t j, int m) -> double {
        if (m >= g.m_count[j]) return -1.0;
        double nu = g.nu(j, m);
        double w = weight_exponent_half == 0.0 ? 1.0 : std::pow(nu, weight_exponent_half);
        return w * std::abs(F.values[g.cell(j, m)]);
    };
    double best = node_best;
    const size_t n = g.n_lambda();
    const size_t panel = best_j / static_cast<size_t>(g.order);
    const size_t p_lo = panel * static_cast<size_t>(g.order);
    const size_t p_hi = p_lo + static_cast<size_t>(g.order) - 1;
    // interior parabola
    if (best_j > p_lo && best_j < p_hi) {
        double x0 = g.lambda_nodes[best_j - 1], x1 = g.lambda_nodes[best_j],
               x2 = g.lambda_nodes[best_j + 1];
        double y0 = value(best_j - 1, best_m), y1 = value(best_j, best_m),
               y2 = value(best_j + 1, best_m);
        if (y0 >= 0.0 && y2 >= 0.0) {
            double d1 = (y1 - y0) / (x1 - x0), d2 = (y2 - y1) / (x2 - x1);
            double c2 = (d2 - d1) / (x2 - x0);
            if (c2 < 0.0) {
                double xv = 0.5 * (x0 + x1 - d1 / c2); // vertex of the Newton-form parabola
                if (xv > std::min(x0, x2) && xv < std::max(x0, x2)) {
                    double yv = y0 + d1 * (xv - x0) + c2 * (xv - x0) * (xv - x1);
                    best = std::max(best, yv);
                }
            }
        }
    }
    // endpoint near lambda -> 0 (only meaningful for the unweighted sup,
    // where |F| can peak at the open end)
    if (weight_exponent_half == 0.0) {
        size_t half = n / 2;
        // nodes half-1 and half are the closest to 0 on each side
        for (size_t j0 : {half, half - 1}) {
            bool to_right = (j0 == half);
            int dir = to_right ? 1 : -1;
            int m = best_m;
            double xs[4], ys[4];
            bool ok = true;
            for (int k = 0; k < 4; ++k) {
                size_t j = j0 + static_cast<size_t>(dir * k);
                if (j >= n || m >= g.m_count[j]) {
                    ok = false;
                    break;
                }
                xs[k] = std::abs(g.lambda_nodes[j]);
                ys[k] = value(j, m);
            }
            if (!ok) continue;
            // Newton cubic through 4 points, evaluated at lambda = 0
            double c01 = (ys[1] - ys[0]) / (xs[1] - xs[0]);
            double c12 = (ys[2] - ys[1]) / (xs[2] - xs[1]);
            double c23 = (ys[3] - ys[2]) / (xs[3] - xs[2]);
            double c012 = (c12 - c01) / (xs[2] - xs[0]);
            double c123 = (c23 - c12) / (xs[3] - xs[1]);
            double c0123 = (c123 - c012) / (xs[3] - xs[0]);
            double v = ys[0] + c01 * (0.0 - xs[0]) + c012 * (0.0 - xs[0]) * (0.0 - xs[1]) +
                       c0123 * (0.0 - xs[0]) * (0.0 - xs[1]) * (0.0 - xs[2]);
            best = std::max(best, v);
        }
    }
    return best;
}

} // namespace

double lp_norm_dual(const SpectralFunction& F, double p, double weight_exponent_half) {
    const DualGrid& g = *F.grid;
    if (p == std::numeric_limits<double>::infinity()) {
        double best = 0.0;
        size_t best_j = 0;
        int best_m = 0;
        for (size_t j = 0; j < g.n_lambda(); ++j) {
            for (int m = 0; m < g.m_count[j]; ++m) {
                double nu = g.nu(j, m);
                double w = weight_exponent_half == 0.0 ? 1.0 : std::pow(nu, weight_exponent_half);
                double v = w * std::abs(F.values[g.cell(j, m)]);
                if (v > best) {
                    best = v;
                    best_j = j;
                    best_m = m;
                }
            }
        }
        return refine_dual_sup(F, weight_exponent_half, best, best_j, best_m);
    }
    if (!(p >= 1.0)) throw std::domain_error("lp_norm_dual: p must be >= 1 or infinity");
    std::vector<double> acc(g.n_lambda());
    for (size_t j = 0; j < g.n_lambda(); ++j) {
        double cell = 0.0;
        for (int m = 0; m < g.m_count[j]; ++m) {
            double nu = g.nu(j, m);
            double w = weight_exponent_half == 0.0 ? 1.0 : std::pow(nu, weight_exponent_half);
            double v = w * std::abs(F.values[g.cell(j, m)]);
            cell += g.lm0[m] * std::pow(v, p);
        }
        acc[j] = g.lambda_weights[j] * cell;
    }
    return std::pow(tree_sum(acc), 1.0 / p);
}

std::complex<double> integrate_space(const SampledFunction& f) {
    const SpaceGrid& g = *f.grid;
    std::vector<std::complex<double>> acc(g.size());
    for (size_t i = 0; i < g.n_x(); ++i)
        for (size_t k = 0; k < g.n_t(); ++k)
            acc[g.idx(i, k)] = g.x_weights[i] * g.t_weights[k] * f.values[g.idx(i, k)];
    return tree_sum(std::span<const std::complex<double>>(acc));
}

std::complex<double> inner_product_space(const SampledFunction& f, const SampledFunction& g) {
    const SpaceGrid& gr = *f.grid;
    std::vector<std::complex<double>> acc(gr.size());
    for (size_t i = 0; i < gr.n_x(); ++i)
        for (size_t k = 0; k < gr.n_t(); ++k)
            acc[gr.idx(i, k)] = gr.x_weights[i] * gr.t_weights[k] * f.values[gr.idx(i, k)] *
                                std::conj(g.values[gr.idx(i, k)]);
    return tree_sum(std::span<const std::complex<double>>(acc));
}

std::complex<double> interp_space(const SampledFunction& f, double x, double t) {
    const SpaceGrid& g = *f.grid;
    x = std::abs(x); // even extension through x = 0
    if (x > g.x_max || t < -g.t_max || t > g.t_max) return {0.0, 0.0};
    size_t px = find_panel(g.x_breaks, x);
    size_t pt = find_panel(g.t_breaks, t);
    double xl = g.x_breaks[px], xh = g.x_breaks[px + 1];
    double tl = g.t_breaks[pt], th = g.t_breaks[pt + 1];
    double sx = (2.0 * x - (xh + xl)) / (xh - xl);
    double st = (2.0 * t - (th + tl)) / (th - tl);
    const int ox = g.x_order, ot = g.t_order;
    std::vector<double> cx(ox), ct(ot);
    // x reference nodes match t reference nodes only when orders agree;
    // orders are both 16 in practice but keep them separate.
    static thread_local std::vector<double> ref_t_nodes, ref_t_bary;
    bary_coeffs(g.ref_nodes, g.ref_bary, sx, cx);
    if (ox == ot) {
        bary_coeffs(g.ref_nodes, g.ref_bary, st, ct);
    } else {
        if (ref_t_nodes.size() != static_cast<size_t>(ot)) {
            QuadRule r = gauss_legendre(ot);
            ref_t_nodes = r.nodes;
            ref_t_bary = barycentric_weights(ref_t_nodes);
        }
        bary_coeffs(ref_t_nodes, ref_t_bary, st, ct);
    }
    std::complex<double> acc{0.0, 0.0};
    const size_t i0 = px * static_cast<size_t>(ox);
    const size_t k0 = pt * static_cast<size_t>(ot);
    for (int i = 0; i < ox; ++i) {
        if (cx[i] == 0.0) continue;
        std::complex<double> row{0.0, 0.0};
        for (int k = 0; k < ot; ++k) row += ct[k] * f.values[g.idx(i0 + i, k0 + k)];
        acc += cx[i] * row;
    }
    return acc;
}

double dual_ball_measure_on_grid(const DualGrid& g, double r) {
    if (!(r > 0.0)) throw std::domain_error("dual_ball_measure_on_grid: r must be > 0");
    const double alpha = g.alpha;
    const int m_direct = 512;
    std::vector<double> terms(m_direct + 1, 0.0);
    for (int m = 0; m <= m_direct; ++m) {
        double rm = std::min(r / (4.0 * m + 2.0 * alpha + 2.0), g.lambda_max);
        double lm0 = m < static_cast<int>(g.lm0.size()) ? g.lm0[m]
                                                        : laguerre_at_zero(m, alpha);
        terms[m] = 2.0 * lm0 * std::pow(rm, alpha + 2.0) / (alpha + 2.0);
    }
    double direct = tree_sum(terms);
    // Euler-Maclaurin tail over m (r_m is far below lambda_max there)
    auto term = [&](double x) {
        double lg = std::lgamma(x + alpha + 1.0) - std::lgamma(x + 1.0) - std::lgamma(alpha + 1.0);
        double rm = r / (4.0 * x + 2.0 * alpha + 2.0);
        return 2.0 * std::exp(lg) * std::pow(rm, alpha + 2.0) / (alpha + 2.0);
    };
    const QuadRule rule = gauss_legendre(32, 0.0, 1.0);
    double x0 = static_cast<double>(m_direct) + 1.0;
    std::vector<double> vals(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double u = rule.nodes[i];
        vals[i] = rule.weights[i] * term(x0 / u) * x0 / (u * u);
    }
    double integral = tree_sum(vals);
    const double h = 0.5;
    double d1 = (term(x0 + h) - term(x0 - h)) / (2.0 * h);
    double d3 = (term(x0 + 2.0 * h) - 2.0 * term(x0 + h) + 2.0 * term(x0 - h) -
                 term(x0 - 2.0 * h)) /
                (2.0 * h * h * h);
    return direct + integral + 0.5 * term(x0) - d1 / 12.0 + d3 / 720.0;
}

double spectral_tail_fraction(const SpectralFunction& F) {
    const DualGrid& g = *F.grid;
    std::vector<double> all(g.n_lambda()), tail(g.n_lambda());
    for (size_t j = 0; j < g.n_lambda(); ++j) {
        double a = 0.0, b = 0.0;
        for (int m = 0; m < g.m_count[j]; ++m) {
            double v = std::norm(F.values[g.cell(j, m)]) * g.lm0[m];
            a += v;
            if (g.nu(j, m) > 0.5 * g.nu_cap) b += v;
        }
        all[j] = g.lambda_weights[j] * a;
        tail[j] = g.lambda_weights[j] * b;
    }
    double total = tree_sum(all);
    if (total <= 0.0) return 0.0;
    return tree_sum(tail) / total;
}

} // namespace laghyp
