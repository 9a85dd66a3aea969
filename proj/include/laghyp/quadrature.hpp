#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace laghyp {

/// Nodes and weights of a quadrature rule on some interval.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on the
/// Legendre recurrence).
QuadRule gauss_legendre(int n);

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadRule gauss_legendre(int n, double a, double b);

/// n-point Gauss-Jacobi rule on [0, 1] for the weight (1-v)^a * v^b,
/// a, b > -1, via Golub-Welsch. The weights integrate the Jacobi weight
/// exactly: sum(w) = B(b+1, a+1).
QuadRule gauss_jacobi01(int n, double a, double b);

/// Composite rule: an `order`-point Gauss-Legendre panel between each
/// pair of consecutive breakpoints.
QuadRule composite_legendre(std::span<const double> breakpoints, int order);

/// Geometric breakpoint ladder {0, hi*2^-(levels-1), ..., hi/2, hi}.
std::vector<double> geometric_ladder(double hi, int levels);

/// Uniform breakpoints a = b_0 < ... < b_n = b.
std::vector<double> uniform_breakpoints(double a, double b, int n);

/// Pairwise (fixed-tree) summation over a fixed index order. Used for
/// every norm/integral reduction so results do not depend on thread
/// count or accumulation chunking.
double tree_sum(std::span<const double> xs);
std::complex<double> tree_sum(std::span<const std::complex<double>> xs);

/// Integrate fn over [a, b] with composite Gauss-Legendre panels,
/// doubling the panel count until the result changes by less than
/// rel_tol (relative) or max_level is hit. Endpoint grading toward
/// both ends handles integrable endpoint singularities.
double adaptive_integrate(const std::function<double(double)>& fn, double a, double b,
                          double rel_tol, bool grade_left = false, bool grade_right = false);

} // namespace laghyp
