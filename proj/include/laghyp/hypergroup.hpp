#pragma once

#include <stdexcept>

namespace laghyp {

/// Point of K = [0,inf) x R.
struct SpacePoint {
    double x = 0.0; // radial coordinate, >= 0
    double t = 0.0; // central coordinate
};

/// Point of the dual K^ = R x N.
struct DualPoint {
    double lambda = 0.0;
    int m = 0; // Laguerre index, >= 0
};

/// Result of the truncated-series evaluation of
///   S_alpha = sum_{m>=0} L_m^alpha(0) / (4m+2alpha+2)^(alpha+2).
/// `value` includes the Euler-Maclaurin tail of the sum beyond m_used;
/// `partial` is the raw truncated sum; `tail_bound` dominates the
/// error left after the tail correction.
struct SeriesValue {
    double value = 0.0;
    double partial = 0.0;
    double tail_correction = 0.0;
    double tail_bound = 0.0;
    int m_used = 0;
    bool converged = false;
};

/// Thrown when a hypothesis such as c < Q or c > alpha+2 fails and the
/// requested integral diverges.
class DivergentIntegralError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Immutable bundle of alpha and the derived geometric constants.
/// All module operations are pure given a context; contexts can be
/// shared freely across threads.
struct HypergroupContext {
    double alpha = 0.0;
    double Q = 4.0;              // homogeneous dimension 2*alpha + 4
    double omega_alpha = 0.0;    // unit-ball volume m_alpha(B_1), by quadrature
    double series_constant = 0.0; // S_alpha
    SeriesValue series_detail;
    int m_max_series = 400;
    double rel_tol = 1e-10;

    static HypergroupContext make(double alpha, double rel_tol = 1e-10, int m_max_series = 400);
};

/// |(x,t)| = (x^4 + 4 t^2)^(1/4); degree-1 homogeneous under (x,t) -> (rx, r^2 t).
double homogeneous_norm(const SpacePoint& p);

/// |(lambda,m)| = 4|lambda| (m + (alpha+1)/2); the L-eigenvalue of phi_(lambda,m).
double dual_norm(const DualPoint& q, const HypergroupContext& ctx);

/// Density of dm_alpha: x^(2alpha+1) / (pi Gamma(alpha+1)).
double space_density(const SpacePoint& p, const HypergroupContext& ctx);

/// Density of dgamma_alpha against dlambda at (lambda, m): L_m^alpha(0) |lambda|^(alpha+1).
double plancherel_weight(const DualPoint& q, const HypergroupContext& ctx);

/// Omega_alpha = m_alpha(B_1), precomputed at context construction.
double unit_ball_volume(const HypergroupContext& ctx);

/// S_alpha with truncation/tail detail (precomputed at construction).
SeriesValue series_constant(const HypergroupContext& ctx);

/// Raw partial sum of the S_alpha series up to m_max inclusive.
double series_partial_sum(double alpha, int m_max);

/// gamma_alpha(E_r) = (2 r^(alpha+2) / (alpha+2)) * S_alpha, r > 0.
double dual_ball_volume(double r, const HypergroupContext& ctx);

/// int_{B_r} |(x,t)|^(-c) dm_alpha = (Q Omega_alpha/(Q-c)) r^(Q-c).
/// Requires c < Q; layered integration over the exact sublevel volumes.
double space_ball_moment(double c, double r, const HypergroupContext& ctx);

/// int_{E_r^c} |(lambda,m)|^(-c) dgamma_alpha = (2/(c-alpha-2)) r^-(c-alpha-2) S_alpha.
/// Requires c > alpha + 2.
double dual_tail_integral(double c, double r, const HypergroupContext& ctx);

/// int_{B_r} |(x,t)|^(-c) dm_alpha by quadrature over the region (the
/// t-slices of B_r integrated with boundary-adapted panels). Used for
/// Omega_alpha at construction and as the cross-check path for
/// space_ball_moment. Requires c < Q.
double ball_region_integral(double c, double r, double alpha, double rel_tol);

/// gamma-measure of E_r by per-m numeric lambda-quadrature plus an
/// Euler-Maclaurin tail over m; the brute-force counterpart of
/// dual_ball_volume.
double dual_ball_bruteforce(double r, const HypergroupContext& ctx);

/// Brute-force counterpart of dual_tail_integral (per-m quadrature of
/// |lambda|^(alpha+1-c) over the complement, plus tails).
double dual_tail_bruteforce(double c, double r, const HypergroupContext& ctx);

} // namespace laghyp
