#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdr/quadrature.hpp"

namespace pdr {

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

namespace detail {

// lower series: gamma(s,x)/Gamma(s) = x^s e^-x / Gamma(s) * sum_m x^m / (s(s+1)..(s+m))
inline double log_gser(double s, double x) {
    double ap = s;
    double del = 1.0 / s;
    double sum = del;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17) break;
    }
    return -x + s * std::log(x) - std::lgamma(s) + std::log(sum);
}

// upper continued fraction (modified Lentz): Q(s,x) = Gamma(s,x)/Gamma(s)
inline double gcf_upper(double s, double x) {
    const double fpmin = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

}  // namespace detail

// Regularized lower incomplete gamma G_s(x) = gamma(s,x)/Gamma(s), the
// Gamma(s) distribution function.
inline double reg_inc_gamma(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("reg_inc_gamma: s must be positive");
    if (x < 0.0) throw std::domain_error("reg_inc_gamma: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) return std::exp(detail::log_gser(s, x));
    return 1.0 - detail::gcf_upper(s, x);
}

// log G_s(x); stays finite-precision for x so small that G underflows
inline double log_reg_inc_gamma(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("log_reg_inc_gamma: s must be positive");
    if (x < 0.0) throw std::domain_error("log_reg_inc_gamma: x must be nonnegative");
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (x < s + 1.0) return detail::log_gser(s, x);
    return std::log1p(-detail::gcf_upper(s, x));
}

// ascending factorial r^{[k]} = r(r+1)...(r+k-1)
inline double ascending_factorial(double r, long long k) {
    if (!(r > 0.0)) throw std::domain_error("ascending_factorial: r must be positive");
    if (k < 0) throw std::domain_error("ascending_factorial: k must be nonnegative");
    if (k <= 30) {
        double prod = 1.0;
        for (long long i = 0; i < k; ++i) prod *= r + static_cast<double>(i);
        return prod;
    }
    return std::exp(std::lgamma(r + static_cast<double>(k)) - std::lgamma(r));
}

inline double log_ascending_factorial(double r, long long k) {
    if (!(r > 0.0)) throw std::domain_error("log_ascending_factorial: r must be positive");
    if (k < 0) throw std::domain_error("log_ascending_factorial: k must be nonnegative");
    return std::lgamma(r + static_cast<double>(k)) - std::lgamma(r);
}

// Psi(lambda) = 1 + alpha * int_0^1 (1 - e^{-lambda x}) x^{-alpha-1} dx.
// Closed form via integration by parts (verified against direct quadrature
// in the test suite): Psi = e^{-lambda} + lambda^alpha Gamma(1-alpha) G_{1-alpha}(lambda).
inline double log_psi_kernel(double alpha, double lambda) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("psi_kernel: alpha must be in (0,1)");
    if (!(lambda > 0.0)) throw std::domain_error("psi_kernel: lambda must be positive");
    const double t = alpha * std::log(lambda) + std::lgamma(1.0 - alpha) +
                     log_reg_inc_gamma(1.0 - alpha, lambda);
    const double m = std::max(-lambda, t);
    return m + std::log(std::exp(-lambda - m) + std::exp(t - m));
}

inline double psi_kernel(double alpha, double lambda) {
    return std::exp(log_psi_kernel(alpha, lambda));
}

// Direct numerical evaluation of the defining integral, used as the
// independent route for the closed-form check and by the Poisson-mixture
// evaluator.  Substitution x = e^v maps (0,1] to (-inf,0]; the integrand
// decays like lambda*e^{(1-alpha)v} so the lower endpoint is truncated where
// that envelope drops below tolerance.
inline double psi_kernel_quadrature(double alpha, double lambda, const QuadratureSpec& spec = {}) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("psi_kernel_quadrature: alpha in (0,1)");
    if (!(lambda > 0.0)) throw std::domain_error("psi_kernel_quadrature: lambda > 0");
    auto g = [alpha, lambda](double v) {
        const double x = std::exp(v);
        return alpha * (-std::expm1(-lambda * x)) * std::exp(-alpha * v);
    };
    const double tol = std::min(spec.abs_tol, 1e-14);
    double v_lo = std::log(tol * (1.0 - alpha) / (alpha * std::max(lambda, 1.0))) / (1.0 - alpha);
    v_lo = std::min(v_lo, -2.0);
    QuadratureSpec s2 = spec;
    s2.rel_tol = std::min(spec.rel_tol, 1e-11);
    IntegrationResult r = integrate_adaptive(g, v_lo, 0.0, s2);
    return 1.0 + r.value;
}

}  // namespace pdr
