#pragma once

#include "laghyp/hypergroup.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace laghyp {

class GridResolutionError : public std::runtime_error {
  public:
    GridResolutionError(const std::string& what, double defect)
        : std::runtime_error(what), defect_(defect) {}
    double defect() const { return defect_; }

  private:
    double defect_ = 0.0;
};

/// Tensor quadrature grid on K = [0, x_max] x [-t_max, t_max].
/// x_weights carry the dm_alpha density x^(2a+1)/(pi Gamma(a+1));
/// t_weights are plain Gauss-Legendre weights. Nodes are stored panel
/// by panel (contiguous `order` nodes per panel).
struct SpaceGrid {
    double alpha = 0.0;
    double x_max = 0.0, t_max = 0.0;
    int x_order = 0, t_order = 0;
    std::vector<double> x_breaks, t_breaks;
    std::vector<double> x_nodes, x_weights;
    std::vector<double> t_nodes, t_weights;
    std::vector<double> ref_nodes, ref_bary; // reference GL nodes + barycentric weights
    double gaussian_selftest_defect = 0.0;
    double ball_indicator_defect = 0.0;

    size_t n_x() const { return x_nodes.size(); }
    size_t n_t() const { return t_nodes.size(); }
    size_t size() const { return n_x() * n_t(); }
    size_t idx(size_t i, size_t k) const { return i * n_t() + k; }
};

/// Ragged dual grid on K^ = R x N. Lambda nodes are symmetric about 0
/// (0 itself excluded); lambda_weights carry |lambda|^(alpha+1). Each
/// lambda node j carries m = 0 .. m_count[j]-1, where m_count is chosen
/// so the dual norm 4|lambda|(m+(alpha+1)/2) reaches nu_cap (capped at
/// m_ceiling). Cell (j, m) lives at offsets[j] + m.
struct DualGrid {
    double alpha = 0.0;
    double lambda_max = 0.0;
    double nu_cap = 0.0;
    int m_ceiling = 0;
    int order = 0;
    std::vector<double> lambda_breaks; // positive half ladder, starting at 0
    std::vector<double> lambda_nodes;  // ascending, negatives first
    std::vector<double> lambda_weights;
    std::vector<int> m_count;
    std::vector<size_t> offsets; // size n_lambda()+1
    std::vector<double> lm0;     // L_m^alpha(0) for m < max m_count
    double gs_selftest_defect = 0.0;
    double ball_selftest_defect = 0.0;
    int m_max_effective = 0;

    size_t n_lambda() const { return lambda_nodes.size(); }
    size_t total_cells() const { return offsets.empty() ? 0 : offsets.back(); }
    size_t cell(size_t j, int m) const { return offsets[j] + static_cast<size_t>(m); }
    double nu(size_t j, int m) const {
        return 4.0 * std::abs(lambda_nodes[j]) * (m + 0.5 * (alpha + 1.0));
    }
};

struct SampledFunction {
    std::shared_ptr<const SpaceGrid> grid;
    std::vector<std::complex<double>> values; // (x-node, t-node) row-major

    std::complex<double>& at(size_t i, size_t k) { return values[grid->idx(i, k)]; }
    const std::complex<double>& at(size_t i, size_t k) const { return values[grid->idx(i, k)]; }
};

struct SpectralFunction {
    std::shared_ptr<const DualGrid> grid;
    std::vector<std::complex<double>> values; // ragged, cell(j, m)

    std::complex<double>& at(size_t j, int m) { return values[grid->cell(j, m)]; }
    const std::complex<double>& at(size_t j, int m) const { return values[grid->cell(j, m)]; }
};

/// Composite Gauss-Legendre grid builder. Panels: a fixed geometric
/// stack toward x = 0 (deeper when 2*alpha+1 is not an integer, where
/// the measure density is not polynomial) plus uniform panels; n_x and
/// n_t set the node budget at 16 nodes per panel. The built grid must
/// reproduce int e^(-x^2-t^2) dm_alpha = 1/(2 sqrt(pi)) to 1e-6 or a
/// GridResolutionError is thrown.
std::shared_ptr<const SpaceGrid> build_space_grid(const HypergroupContext& ctx, double x_max,
                                                  double t_max, int n_x, int n_t);

/// Ragged dual grid builder; n_lambda is the node budget per half-axis
/// (7 geometric panels, order n_lambda/7). Self-tests: the quadrature
/// of g_1 against its closed form, and the gamma-measure of E_1
/// (per-m panel-clipped integration) against dual_ball_volume.
std::shared_ptr<const DualGrid> build_dual_grid(const HypergroupContext& ctx, double lambda_max,
                                                int n_lambda, int m_max, double nu_cap = 1024.0);

SampledFunction sample(std::shared_ptr<const SpaceGrid> grid,
                       const std::function<std::complex<double>(double, double)>& fn);

/// Weighted L^p norm (int (|(x,t)|^a |f|)^p dm_alpha)^(1/p);
/// p = infinity gives the node max of |(x,t)|^a |f|.
double lp_norm_space(const SampledFunction& f, double p, double weight_exponent = 0.0);

/// Dual-side counterpart with weight |(lambda,m)|^(b/2). For p =
/// infinity the node sup is sharpened by panel-local polynomial
/// refinement in lambda (including extrapolation to lambda -> 0), since
/// the plain node sup undershoots smooth peaks.
double lp_norm_dual(const SpectralFunction& F, double p, double weight_exponent_half = 0.0);

/// int f dm_alpha (no absolute value).
std::complex<double> integrate_space(const SampledFunction& f);

/// int f conj(g) dm_alpha.
std::complex<double> inner_product_space(const SampledFunction& f, const SampledFunction& g);

/// Panel-local barycentric interpolation of f at (x, t); x is reflected
/// through 0 (functions on K extend evenly), points outside the box
/// read as 0.
std::complex<double> interp_space(const SampledFunction& f, double x, double t);

/// gamma-measure of E_r as seen by the grid: per-m exact integration of
/// |lambda|^(alpha+1) over [0, r_m] clipped to the grid's lambda range,
/// with the Euler-Maclaurin tail beyond the direct m range.
double dual_ball_measure_on_grid(const DualGrid& grid, double r);

/// Fraction of |F|^2 gamma-mass in cells with nu > nu_cap/2 (dual tail
/// diagnostic used by inverse/spectral operators).
double spectral_tail_fraction(const SpectralFunction& F);

} // namespace laghyp
