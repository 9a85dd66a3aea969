#include "laghyp/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace laghyp {

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-style initial guess, then Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        // one clean-up Newton step at converged z for pp
        {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadRule gauss_legendre(int n, double a, double b) {
    QuadRule base = gauss_legendre(n);
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        base.nodes[i] = xm + xl * base.nodes[i];
        base.weights[i] *= xl;
    }
    return base;
}

namespace {

// Symmetric tridiagonal eigensolve by QL with implicit shifts
// (EISPACK tql2 restricted to eigenvalues + first row of the
// eigenvector matrix, which is all Golub-Welsch needs).
// d: diagonal, e: subdiagonal (e[0] unused), z: in/out first components.
void tql_first_components(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        for (;;) {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > 50) throw std::runtime_error("gauss_jacobi01: eigensolve failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // sort ascending, carrying z
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        std::swap(d[i], d[k]);
        std::swap(z[i], z[k]);
    }
}

} // namespace

QuadRule gauss_jacobi01(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi01: n must be >= 1");
    if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("gauss_jacobi01: exponents must be > -1");
    // Recurrence coefficients of monic Jacobi polynomials for the weight
    // (1-x)^a (1+x)^b on [-1,1].
    std::vector<double> diag(n), sub(n, 0.0), z(n, 0.0);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        double denom = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        if (k == 0 && std::abs(ab) < 1e-14 && std::abs(a - b) < 1e-14)
            diag[k] = 0.0;
        else if (k == 0)
            diag[k] = (b - a) / (ab + 2.0);
        else
            diag[k] = (b * b - a * a) / denom;
    }
    for (int k = 1; k < n; ++k) {
        double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
        double den = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
        sub[k] = std::sqrt(num / den);
    }
    z[0] = 1.0;
    tql_first_components(diag, sub, z);
    // total mass: int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    const double logmu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                          std::lgamma(ab + 2.0);
    const double mu0 = std::exp(logmu0);
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // map x in [-1,1] to v in [0,1]; weight (1-x)^a (1+x)^b dx = 2^{a+b+1} (1-v)^a v^b dv
        rule.nodes[i] = 0.5 * (diag[i] + 1.0);
        rule.weights[i] = mu0 * z[i] * z[i] / std::pow(2.0, ab + 1.0);
    }
    return rule;
}

QuadRule composite_legendre(std::span<const double> breakpoints, int order) {
    if (breakpoints.size() < 2) throw std::invalid_argument("composite_legendre: need >= 2 breakpoints");
    QuadRule base = gauss_legendre(order);
    QuadRule out;
    const size_t npanels = breakpoints.size() - 1;
    out.nodes.reserve(npanels * order);
    out.weights.reserve(npanels * order);
    for (size_t p = 0; p < npanels; ++p) {
        double lo = breakpoints[p], hi = breakpoints[p + 1];
        double xm = 0.5 * (hi + lo), xl = 0.5 * (hi - lo);
        for (int i = 0; i < order; ++i) {
            out.nodes.push_back(xm + xl * base.nodes[i]);
            out.weights.push_back(xl * base.weights[i]);
        }
    }
    return out;
}

std::vector<double> geometric_ladder(double hi, int levels) {
    std::vector<double> br(levels + 1);
    br[0] = 0.0;
    for (int i = 1; i <= levels; ++i) br[i] = hi * std::pow(2.0, -(levels - i));
    return br;
}

std::vector<double> uniform_breakpoints(double a, double b, int n) {
    std::vector<double> br(n + 1);
    for (int i = 0; i <= n; ++i) br[i] = a + (b - a) * static_cast<double>(i) / n;
    return br;
}

namespace {

template <typename T>
T tree_sum_impl(std::span<const T> xs) {
    const size_t n = xs.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T s{};
        for (const T& x : xs) s += x;
        return s;
    }
    const size_t half = n / 2;
    return tree_sum_impl(xs.subspan(0, half)) + tree_sum_impl(xs.subspan(half));
}

} // namespace

double tree_sum(std::span<const double> xs) { return tree_sum_impl(xs); }
std::complex<double> tree_sum(std::span<const std::complex<double>> xs) { return tree_sum_impl(xs); }

double adaptive_integrate(const std::function<double(double)>& fn, double a, double b,
                          double rel_tol, bool grade_left, bool grade_right) {
    const int order = 16;
    double prev = 0.0;
    for (int level = 3; level <= 11; ++level) {
        // normalized breakpoints: octave ladders into graded endpoints,
        // uniform panels in between
        const int depth = 12 * level;
        const int nuni = 1 << level;
        std::vector<double> s;
        s.push_back(0.0);
        double s_lo = grade_left ? 0.25 : 0.0;
        double s_hi = grade_right ? 0.75 : 1.0;
        if (grade_left)
            for (int i = depth - 1; i >= 0; --i) s.push_back(0.25 * std::pow(2.0, -i));
        for (int i = 1; i < nuni; ++i)
            s.push_back(s_lo + (s_hi - s_lo) * static_cast<double>(i) / nuni);
        if (grade_right) {
            for (int i = 0; i < depth; ++i) s.push_back(1.0 - 0.25 * std::pow(2.0, -i));
        }
        s.push_back(1.0);
        std::vector<double> br;
        br.reserve(s.size());
        br.push_back(a);
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            double x = a + (b - a) * s[i];
            if (x > br.back()) br.push_back(x);
        }
        br.push_back(b);
        QuadRule rule = composite_legendre(br, order);
        std::vector<double> vals(rule.nodes.size());
        for (size_t i = 0; i < rule.nodes.size(); ++i) vals[i] = rule.weights[i] * fn(rule.nodes[i]);
        double cur = tree_sum(vals);
        if (level > 3) {
            double denom = std::max(std::abs(cur), 1e-300);
            if (std::abs(cur - prev) / denom < rel_tol) return cur;
        }
        prev = cur;
    }
    return prev;
}

} // namespace laghyp
