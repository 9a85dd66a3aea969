#pragma once

#include "laghyp/grid.hpp"

#include <optional>

namespace laghyp {

/// Forward Fourier-Laguerre transform: fhat(lambda, m) =
/// int f(x,t) phi_(-lambda,m)(x,t) dm_alpha, by grid quadrature. The
/// t-phase and the Laguerre sweep factor through the tensor grid, so the
/// cost is n_lambda * n_x * (n_t + m_count).
SpectralFunction forward(const SampledFunction& f, std::shared_ptr<const DualGrid> dual,
                         const HypergroupContext& ctx);

/// Inversion: f(x,t) = int fhat phi_(lambda,m) dgamma_alpha. If
/// tail_fraction_out is non-null it receives the |F|^2 mass fraction in
/// the outer half of the grid's nu range (a truncation diagnostic; a
/// large value means the inversion is missing dual mass).
SampledFunction inverse(const SpectralFunction& F, std::shared_ptr<const SpaceGrid> space,
                        const HypergroupContext& ctx, double* tail_fraction_out = nullptr);

/// | ||f||_2 - ||fhat||_2 | / ||f||_2.
double plancherel_defect(const SampledFunction& f, const SpectralFunction& fhat);
double plancherel_defect(const SampledFunction& f, std::shared_ptr<const DualGrid> dual,
                         const HypergroupContext& ctx);

/// ||fhat||_p' / ||f||_p for 1 <= p <= 2 (p' = p/(p-1), infinity at p=1).
double hausdorff_young_ratio(const SampledFunction& f, double p, const SpectralFunction& fhat);
double hausdorff_young_ratio(const SampledFunction& f, double p,
                             std::shared_ptr<const DualGrid> dual, const HypergroupContext& ctx);

/// Barycentric interpolation of F along lambda at fixed m (within the
/// panel containing lambda). Returns nullopt outside the grid or where
/// the panel's nodes do not carry index m.
std::optional<std::complex<double>> interp_dual(const SpectralFunction& F, double lambda, int m);

struct DilationDefect {
    double spectral_max = 0.0; // max |forward(dil_r f) - fhat(r^2 lambda, m)|
    double l1_defect = 0.0;    // | ||dil_r f||_1 - ||f||_1 | / ||f||_1
    size_t compared_cells = 0;
};

/// Checks forward(dil_r f)(lambda,m) = fhat(r^2 lambda, m) and the L^1
/// preservation of the dilation.
DilationDefect dilation_identity_defect(const SampledFunction& f, double r,
                                        std::shared_ptr<const DualGrid> dual,
                                        const HypergroupContext& ctx);

} // namespace laghyp
