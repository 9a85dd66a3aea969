#pragma once

#include <complex>
#include <span>
#include <vector>

namespace laghyp {

struct SpacePoint;
struct DualPoint;
struct HypergroupContext;

/// Generalized Laguerre polynomial L_m^alpha(u) by the forward
/// three-term recurrence. Stable on u >= 0 for the degrees used here.
double laguerre_poly(int m, double alpha, double u);

/// L_m^alpha(0) = Gamma(m+alpha+1) / (m! Gamma(alpha+1)), evaluated in
/// log space so large m does not overflow.
double laguerre_at_zero(int m, double alpha);
double log_laguerre_at_zero(int m, double alpha);

/// Table of L_m^alpha(0) for m = 0..count-1 via the ratio recurrence
/// L_{m+1}(0) = L_m(0) (m+1+alpha)/(m+1).
std::vector<double> laguerre_zero_table(double alpha, int count);

/// Normalized Laguerre function values
///   psi_m(u) = (m! Gamma(alpha+1)/Gamma(m+alpha+1)) e^{-u/2} L_m^alpha(u)
/// for m = 0..out.size()-1, in one recurrence sweep. |psi_m| <= 1 for
/// alpha >= 0, so the sweep never overflows regardless of m or u.
void laguerre_psi_sweep(double alpha, double u, std::span<double> out);

/// Eigenfunction phi_(lambda,m)(x,t) = e^{i lambda t} psi_m(|lambda| x^2).
std::complex<double> phi(const DualPoint& q, const SpacePoint& p, const HypergroupContext& ctx);

struct FdConfig {
    int order = 6;
    double h = 1e-3;
};

/// Max normalized residual |L_fd phi - nu phi| / (1 + nu) over a fixed
/// probe set, nu the closed-form eigenvalue 4|lambda|(m+(alpha+1)/2).
/// Requires lambda != 0.
double eigen_residual(const DualPoint& q, const HypergroupContext& ctx, const FdConfig& fd);

} // namespace laghyp
