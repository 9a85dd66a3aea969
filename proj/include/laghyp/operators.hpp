#pragma once

#include "laghyp/grid.hpp"
#include "laghyp/stencil.hpp"

namespace laghyp {

class CostGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TranslateOptions {
    int n_theta = 64; // equispaced rule for the periodic theta integral
    int n_r = 24;     // Gauss-Jacobi points in the radial variable (alpha > 0 branch)
};

/// Hypergroup translation T^(alpha)_by applied to f, evaluated at the
/// grid nodes. Off-grid reads of f use panel interpolation; points
/// escaping the box read 0.
SampledFunction translate(const SampledFunction& f, const SpacePoint& by,
                          const HypergroupContext& ctx, const TranslateOptions& opts = {});

struct ConvolveOptions {
    TranslateOptions translate;
    double budget = 1e9; // max node-pair * quadrature evaluations
};

/// Density-level convolution: h(y,s) = int f(x,t) (T_(x,-t) g)(y,s)
/// dm_alpha(x,t), the specialization of the measure convolution to
/// densities f dm, g dm. Refuses grids whose double quadrature exceeds
/// the budget.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         const HypergroupContext& ctx, const ConvolveOptions& opts = {});

/// (dil_r f)(x,t) = r^-Q f(x/r, t/r^2), resampled on f's grid.
SampledFunction dilate(const SampledFunction& f, double r, const HypergroupContext& ctx);

/// Sub-Laplacian by central finite differences on the interpolant of f.
/// The x < 0 reads reflect evenly; the (2a+1)/x term is regular on the
/// grid (nodes are interior) and switches to its even-extension limit
/// (2a+1) f_xx at x = 0.
SampledFunction sublaplacian_fd(const SampledFunction& f, const HypergroupContext& ctx,
                                int order = 6, double h = 1e-3);

/// Spectral multiplier route: inverse(dual_norm^gamma_power * forward(f)).
/// gamma_power = 1 is the sub-Laplacian itself. tail_fraction_out as in
/// inverse().
SampledFunction sublaplacian_spectral(const SampledFunction& f, double gamma_power,
                                      std::shared_ptr<const DualGrid> dual,
                                      const HypergroupContext& ctx,
                                      double* tail_fraction_out = nullptr);

} // namespace laghyp
