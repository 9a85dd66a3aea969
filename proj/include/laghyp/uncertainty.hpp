#pragma once

#include "laghyp/grid.hpp"

#include <string>
#include <vector>

namespace laghyp {

enum class TheoremId { T15, T16, T17, T18 };

std::string theorem_name(TheoremId id);

/// One Heisenberg-Pauli-Weyl evaluation. For T15/T17/T18 the two sides
/// are lhs = ||f||_p^(a+b), rhs = || |.|^a f ||_p^b * || nu^(b/2) fhat ||_p'^a;
/// T16 swaps the roles: lhs = ||fhat||_p^(a+b) with the space norm taken
/// in p' and the dual norm in p.
struct HpwRecord {
    double p = 0.0, a = 0.0, b = 0.0;
    TheoremId theorem = TheoremId::T15;
    bool admissible = false;
    double norm_p = 0.0;      // base norm of the lhs
    double wnorm_space = 0.0; // weighted space norm entering the rhs
    double wnorm_dual = 0.0;  // weighted dual norm entering the rhs
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0; // rhs / lhs; the inequality asserts ratio >= 1/C
};

bool hpw_admissible(TheoremId id, double p, double a, double b, const HypergroupContext& ctx);

HpwRecord hpw_ratio(const SampledFunction& f, const SpectralFunction& fhat, double p, double a,
                    double b, const HypergroupContext& ctx, TheoremId theorem);

/// |ratio(c * dil_r f) - ratio(f)| / ratio(f) in the T15/T18 setting.
double scale_invariance_defect(const SampledFunction& f, double p, double a, double b, double c,
                               double r, std::shared_ptr<const DualGrid> dual,
                               const HypergroupContext& ctx);

/// Constructive constant of the p = 1 theorem, with the selection chain
/// made concrete: s0 = 2^(1/a); r1 halves the Plancherel lower bound
/// against the tail estimate; r2 halves what remains against the ball
/// volume. Requires b > Q/2.
struct Case1Constant {
    double value = 0.0;
    double s0 = 0.0, r1 = 0.0, r2 = 0.0;
    double plancherel_bound = 0.0; // (1 - s0^-a)^2 / (s0^Q Omega)
};
Case1Constant case1_constant(double a, double b, const HypergroupContext& ctx);

/// Constructive constant of the 1 < p < 2 theorem. s0 = 2^(1/(ap));
/// P2 = (1-s0^(-ap))^(2/p) (s0^Q Omega)^(1-2/p) is the kept-mass bound
/// (the unit-ball volume is carried explicitly rather than absorbed);
/// r1, r2 halve as in case 1. Requires 1 < p < 2, b > Q(1/p - 1/2).
struct Case2Constant {
    double value = 0.0;
    double s0 = 0.0, r1 = 0.0, r2 = 0.0;
    double kept_mass = 0.0; // P2
};
Case2Constant case2_constant(double a, double b, double p, const HypergroupContext& ctx);

/// || nu^(b/2) fhat ||_p' of f rescaled to ||f||_p = || |.|^a f ||_p = 1
/// (computed algebraically from the unnormalized norms; p = 1 uses the
/// sup dual norm). This is the quantity the constructive constants
/// lower-bound.
double normalized_dual_norm(const SampledFunction& f, const SpectralFunction& fhat, double a,
                            double b, double p, const HypergroupContext& ctx);

struct MainLemReport {
    double I1 = 0.0, I2 = 0.0, I3 = 0.0;
    double gamma_Er = 0.0;
    double holder1_rhs = 0.0; // bound on I1
    double holder2_rhs = 0.0; // bound on I2
    double slack1 = 0.0, slack2 = 0.0; // rhs/lhs, >= 1 when the bound holds
    bool ok = false;
};

/// Checks the two Hoelder estimates of the L^2-membership lemma at
/// radius r. Requires 1 < p < 2 and b > Q(1/p - 1/2).
MainLemReport mainlem_bound_check(const SampledFunction& f, const SpectralFunction& fhat, double p,
                                  double b, double r, const HypergroupContext& ctx);

/// Exact ||g_s||_p from the closed form
/// ||g_s||_p^p = (s^(-Q/4)/p^(Q/4)) Gamma(Q/4) S_alpha.
double gs_norm(double s, double p, const HypergroupContext& ctx);

/// g_s sampled on a dual grid: g_s(lambda,m) = exp(-s nu^2).
SpectralFunction gs_spectral(double s, std::shared_ptr<const DualGrid> dual);

struct Ineq332Report {
    std::vector<double> s_values;
    std::vector<double> K;          // ||g_s fhat||_p s^(a/4) / || |.|^a f ||_p'
    std::vector<double> gs_norms;   // ||g_s fhat||_p
    double slope = 0.0;             // log-log slope of ||g_s fhat||_p in s
    double K_median = 0.0;
    double K_spread = 0.0;          // max K / median K over the s range
};

/// Evaluates the smoothing inequality ||g_s fhat||_p <~ s^(-a/4)
/// || |.|^a f ||_p' across a set of s values. Requires p >= 2 and
/// 0 < a < Q/p.
Ineq332Report ineq332_check(const SampledFunction& f, const SpectralFunction& fhat, double a,
                            double p, std::span<const double> s_values,
                            const HypergroupContext& ctx);

/// Balancing choice s^(1/4) = (a n_space / (b n_dual))^(1/(a+b)).
double optimal_s(double a, double b, double n_space, double n_dual);

struct ElementaryBoundReport {
    double sup = 0.0;
    bool ok = false;
};

/// sup over a log grid of z^(-b/4)(1 - e^-z) for z in (0, 1e6], which
/// must stay <= 1 for 0 < b < 4.
ElementaryBoundReport elementary_bound_check(double b);

} // namespace laghyp
