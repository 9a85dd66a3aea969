#pragma once

#include <complex>
#include <functional>
#include <span>

namespace laghyp {

/// Central finite-difference coefficients. Order must be 2, 4, 6 or 8;
/// the stencil has order+1 points centered at offset 0.
std::span<const double> central_d1_coeffs(int order);
std::span<const double> central_d2_coeffs(int order);

using ComplexField = std::function<std::complex<double>(double, double)>;

/// Sub-Laplacian -(d^2/dx^2 + ((2a+1)/x) d/dx + x^2 d^2/dt^2) of a
/// callable field at (x, t), by central stencils of the given order and
/// step h. x-evaluations reflect through x=0 (even extension); at x=0
/// the singular first-order term uses its even-function limit
/// (2a+1) * f_xx(0).
std::complex<double> sublaplacian_at(const ComplexField& f, double x, double t, double alpha,
                                     int order, double h);

} // namespace laghyp
