#include "laghyp/operators.hpp"

#include "laghyp/quadrature.hpp"
#include "laghyp/transform.hpp"

#include <array>
#include <cmath>

namespace laghyp {

namespace {

// Central difference tables, orders 2/4/6/8, offsets -order/2 .. order/2.
constexpr std::array<double, 3> d1_o2 = {-0.5, 0.0, 0.5};
constexpr std::array<double, 3> d2_o2 = {1.0, -2.0, 1.0};
constexpr std::array<double, 5> d1_o4 = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
constexpr std::array<double, 5> d2_o4 = {-1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12};
constexpr std::array<double, 7> d1_o6 = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0,
                                         3.0 / 4,   -3.0 / 20, 1.0 / 60};
constexpr std::array<double, 7> d2_o6 = {1.0 / 90, -3.0 / 20, 1.5, -49.0 / 18,
                                         1.5,      -3.0 / 20, 1.0 / 90};
constexpr std::array<double, 9> d1_o8 = {1.0 / 280,  -4.0 / 105, 1.0 / 5,   -4.0 / 5, 0.0,
                                         4.0 / 5,    -1.0 / 5,   4.0 / 105, -1.0 / 280};
constexpr std::array<double, 9> d2_o8 = {-1.0 / 560, 8.0 / 315, -1.0 / 5,  8.0 / 5, -205.0 / 72,
                                         8.0 / 5,    -1.0 / 5,  8.0 / 315, -1.0 / 560};

} // namespace

std::span<const double> central_d1_coeffs(int order) {
    switch (order) {
    case 2: return d1_o2;
    case 4: return d1_o4;
    case 6: return d1_o6;
    case 8: return d1_o8;
    default: throw std::invalid_argument("central stencil order must be 2, 4, 6 or 8");
    }
}

std::span<const double> central_d2_coeffs(int order) {
    switch (order) {
    case 2: return d2_o2;
    case 4: return d2_o4;
    case 6: return d2_o6;
    case 8: return d2_o8;
    default: throw std::invalid_argument("central stencil order must be 2, 4, 6 or 8");
    }
}

std::complex<double> sublaplacian_at(const ComplexField& f, double x, double t, double alpha,
                                     int order, double h) {
    const auto c1 = central_d1_coeffs(order);
    const auto c2 = central_d2_coeffs(order);
    const int half = order / 2;
    std::complex<double> fxx{0.0, 0.0}, fx{0.0, 0.0}, ftt{0.0, 0.0};
    for (int k = -half; k <= half; ++k) {
        const double xq = x + k * h; // callers reflect x<0 evenly
        std::complex<double> vx = f(xq, t);
        fxx += c2[k + half] * vx;
        fx += c1[k + half] * vx;
        if (k != 0) {
            ftt += c2[k + half] * f(x, t + k * h);
        } else {
            ftt += c2[half] * vx;
        }
    }
    fxx /= h * h;
    fx /= h;
    ftt /= h * h;
    std::complex<double> singular;
    if (std::abs(x) < 1e-12) {
        singular = (2.0 * alpha + 1.0) * fxx; // even-extension limit of f_x/x
    } else {
        singular = (2.0 * alpha + 1.0) / x * fx;
    }
    return -(fxx + singular + x * x * ftt);
}

SampledFunction translate(const SampledFunction& f, const SpacePoint& by,
                          const HypergroupContext& ctx, const TranslateOptions& opts) {
    const SpaceGrid& g = *f.grid;
    SampledFunction out;
    out.grid = f.grid;
    if (by.x == 0.0 && by.t == 0.0) {
        out.values = f.values; // exact identity
        return out;
    }
    out.values.resize(g.size());
    if (by.x == 0.0) {
        for (size_t i = 0; i < g.n_x(); ++i)
            for (size_t k = 0; k < g.n_t(); ++k)
                out.values[g.idx(i, k)] = interp_space(f, g.x_nodes[i], g.t_nodes[k] + by.t);
        return out;
    }
    const int ntheta = opts.n_theta;
    std::vector<double> cth(ntheta), sth(ntheta);
    for (int q = 0; q < ntheta; ++q) {
        double th = 2.0 * M_PI * q / ntheta;
        cth[q] = std::cos(th);
        sth[q] = std::sin(th);
    }
    if (ctx.alpha == 0.0) {
        for (size_t i = 0; i < g.n_x(); ++i) {
            const double y = g.x_nodes[i];
            for (size_t k = 0; k < g.n_t(); ++k) {
                const double s = g.t_nodes[k];
                std::complex<double> acc{0.0, 0.0};
                for (int q = 0; q < ntheta; ++q) {
                    double xx = std::sqrt(by.x * by.x + y * y + 2.0 * by.x * y * cth[q]);
                    double tt = s + by.t + by.x * y * sth[q];
                    acc += interp_space(f, xx, tt);
                }
                out.values[g.idx(i, k)] = acc / static_cast<double>(ntheta);
            }
        }
        return out;
    }
    // alpha > 0: radial average with Gauss-Jacobi in v = r^2,
    // weight (1-v)^(alpha-1); sum of weights is 1/alpha.
    QuadRule jac = gauss_jacobi01(opts.n_r, ctx.alpha - 1.0, 0.0);
    std::vector<double> sq(jac.nodes.size());
    for (size_t v = 0; v < jac.nodes.size(); ++v) sq[v] = std::sqrt(jac.nodes[v]);
    for (size_t i = 0; i < g.n_x(); ++i) {
        const double y = g.x_nodes[i];
        for (size_t k = 0; k < g.n_t(); ++k) {
            const double s = g.t_nodes[k];
            std::complex<double> acc{0.0, 0.0};
            for (int q = 0; q < ntheta; ++q) {
                std::complex<double> rad{0.0, 0.0};
                for (size_t v = 0; v < jac.nodes.size(); ++v) {
                    double rho = sq[v];
                    double xx = std::sqrt(by.x * by.x + y * y + 2.0 * by.x * y * rho * cth[q]);
                    double tt = s + by.t + by.x * y * rho * sth[q];
                    rad += jac.weights[v] * interp_space(f, xx, tt);
                }
                acc += rad;
            }
            out.values[g.idx(i, k)] = ctx.alpha / static_cast<double>(ntheta) * acc;
        }
    }
    return out;
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         const HypergroupContext& ctx, const ConvolveOptions& opts) {
    const SpaceGrid& gr = *f.grid;
    if (f.grid != g.grid) throw std::invalid_argument("convolve: f and g must share a grid");
    const double inner = static_cast<double>(opts.translate.n_theta) *
                         (ctx.alpha > 0.0 ? opts.translate.n_r : 1);
    const double cost = static_cast<double>(gr.size()) * static_cast<double>(gr.size()) * inner;
    if (cost > opts.budget)
        throw CostGuardError("convolve: double quadrature cost " + std::to_string(cost) +
                             " exceeds budget " + std::to_string(opts.budget));

    const int ntheta = opts.translate.n_theta;
    std::vector<double> cth(ntheta), sth(ntheta);
    for (int q = 0; q < ntheta; ++q) {
        double th = 2.0 * M_PI * q / ntheta;
        cth[q] = std::cos(th);
        sth[q] = std::sin(th);
    }
    QuadRule jac;
    std::vector<double> sq;
    if (ctx.alpha > 0.0) {
        jac = gauss_jacobi01(opts.translate.n_r, ctx.alpha - 1.0, 0.0);
        sq.resize(jac.nodes.size());
        for (size_t v = 0; v < jac.nodes.size(); ++v) sq[v] = std::sqrt(jac.nodes[v]);
    }

    // (T_(x,-t) g)(y,s) averaged against f(x,t) dm_alpha(x,t)
    SampledFunction out;
    out.grid = f.grid;
    out.values.assign(gr.size(), {0.0, 0.0});
    for (size_t i = 0; i < gr.n_x(); ++i) {
        const double y = gr.x_nodes[i];
        for (size_t k = 0; k < gr.n_t(); ++k) {
            const double s = gr.t_nodes[k];
            std::complex<double> total{0.0, 0.0};
            for (size_t a = 0; a < gr.n_x(); ++a) {
                const double x = gr.x_nodes[a];
                const double wx = gr.x_weights[a];
                for (size_t b = 0; b < gr.n_t(); ++b) {
                    const std::complex<double> fv = f.values[gr.idx(a, b)];
                    if (fv == std::complex<double>{0.0, 0.0}) continue;
                    const double shift = s - gr.t_nodes[b];
                    std::complex<double> tg{0.0, 0.0};
                    if (ctx.alpha == 0.0) {
                        for (int q = 0; q < ntheta; ++q) {
                            double xx = std::sqrt(x * x + y * y + 2.0 * x * y * cth[q]);
                            double tt = shift + x * y * sth[q];
                            tg += interp_space(g, xx, tt);
                        }
                        tg /= static_cast<double>(ntheta);
                    } else {
                        for (int q = 0; q < ntheta; ++q) {
                            std::complex<double> rad{0.0, 0.0};
                            for (size_t v = 0; v < jac.nodes.size(); ++v) {
                                double rho = sq[v];
                                double xx =
                                    std::sqrt(x * x + y * y + 2.0 * x * y * rho * cth[q]);
                                double tt = shift + x * y * rho * sth[q];
                                rad += jac.weights[v] * interp_space(g, xx, tt);
                            }
                            tg += rad;
                        }
                        tg *= ctx.alpha / static_cast<double>(ntheta);
                    }
                    total += wx * gr.t_weights[b] * fv * tg;
                }
            }
            out.values[gr.idx(i, k)] = total;
        }
    }
    return out;
}

SampledFunction dilate(const SampledFunction& f, double r, const HypergroupContext& ctx) {
    if (!(r > 0.0)) throw std::domain_error("dilate: r must be > 0");
    SampledFunction out;
    out.grid = f.grid;
    if (r == 1.0) {
        out.values = f.values; // exact identity
        return out;
    }
    const SpaceGrid& g = *f.grid;
    out.values.resize(g.size());
    const double scale = std::pow(r, -ctx.Q);
    for (size_t i = 0; i < g.n_x(); ++i)
        for (size_t k = 0; k < g.n_t(); ++k)
            out.values[g.idx(i, k)] =
                scale * interp_space(f, g.x_nodes[i] / r, g.t_nodes[k] / (r * r));
    return out;
}

SampledFunction sublaplacian_fd(const SampledFunction& f, const HypergroupContext& ctx, int order,
                                double h) {
    const SpaceGrid& g = *f.grid;
    ComplexField field = [&](double x, double t) { return interp_space(f, x, t); };
    SampledFunction out;
    out.grid = f.grid;
    out.values.resize(g.size());
    for (size_t i = 0; i < g.n_x(); ++i)
        for (size_t k = 0; k < g.n_t(); ++k)
            out.values[g.idx(i, k)] =
                sublaplacian_at(field, g.x_nodes[i], g.t_nodes[k], ctx.alpha, order, h);
    return out;
}

SampledFunction sublaplacian_spectral(const SampledFunction& f, double gamma_power,
                                      std::shared_ptr<const DualGrid> dual,
                                      const HypergroupContext& ctx, double* tail_fraction_out) {
    if (gamma_power < 0.0)
        throw std::domain_error("sublaplacian_spectral: gamma_power must be >= 0");
    SpectralFunction F = forward(f, dual, ctx);
    const DualGrid& dg = *dual;
    if (gamma_power != 0.0) {
        for (size_t j = 0; j < dg.n_lambda(); ++j) {
            for (int m = 0; m < dg.m_count[j]; ++m)
                F.values[dg.cell(j, m)] *= std::pow(dg.nu(j, m), gamma_power);
        }
    }
    return inverse(F, f.grid, ctx, tail_fraction_out);
}

} // namespace laghyp
