#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdr {

enum class TailStrategy { fixed_upper_bound, asymptotic_tail_bound };

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 400;
    TailStrategy tail = TailStrategy::asymptotic_tail_bound;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: rel_tol > 0, abs_tol > 0, max_subdivisions >= 1 required");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error_bound = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_bound(err) {}
    double best_estimate;
    double error_bound;
};

namespace detail {

// Gauss-Kronrod 15(7) on [-1, 1]
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGk15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGauss7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kGk15Weights[7] * fc;
    double resg = kGauss7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGk15Nodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        resk += kGk15Weights[i] * fsum;
        if (i % 2 == 1) resg += kGauss7Weights[i / 2] * fsum;
    }
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod on a finite interval.
template <class F>
inline IntegrationResult integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    std::priority_queue<detail::Segment> heap;
    double v, e;
    detail::gk15(f, a, b, v, e);
    heap.push({a, b, v, e});
    double total = v, total_err = e;
    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
           splits < spec.max_subdivisions) {
        detail::Segment s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        detail::Segment l{s.a, mid, 0, 0}, r{mid, s.b, 0, 0};
        detail::gk15(f, l.a, l.b, l.value, l.err);
        detail::gk15(f, r.a, r.b, r.value, r.err);
        total += l.value + r.value - s.value;
        total_err += l.err + r.err - s.err;
        heap.push(l);
        heap.push(r);
        ++splits;
    }
    IntegrationResult res;
    res.value = total;
    res.error_bound = total_err;
    res.subdivisions = splits;
    res.converged = total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return res;
}

// Improper integral of f over (0, inf) via the substitution lambda = e^u,
// which turns power-law endpoint behaviour (f ~ l^{c-1} at 0, f ~ l^{-d-1}
// at infinity) into two-sided exponential decay in u.  The u-window expands
// until appended segments stop contributing; each segment is integrated
// adaptively.  Throws QuadratureError (carrying the best estimate and the
// achieved bound) if either the window or the subdivision budget runs out
// while segments are still significant.
template <class F>
inline IntegrationResult integrate_improper(const F& f, const QuadratureSpec& spec) {
    spec.validate();
    auto g = [&f](double u) {
        const double lam = std::exp(u);
        return f(lam) * lam;
    };
    const double seg_w = 4.0;
    const double u_hard_lo = -700.0;
    const double u_hard_hi = (spec.tail == TailStrategy::fixed_upper_bound) ? 64.0 : 5000.0;

    // coarse scan for the bulk of the mass; expanding from lambda ~ 1 alone
    // can quit before reaching a mode that sits far out in either tail
    double u_center = 0.0, peak = 0.0;
    for (double u = -48.0; u <= 480.0; u += 2.0) {
        double val = std::abs(g(u));
        if (std::isfinite(val) && val > peak) {
            peak = val;
            u_center = u;
        }
    }
    if (peak == 0.0) u_center = 0.0;

    QuadratureSpec local = spec;
    local.max_subdivisions = std::max(20, spec.max_subdivisions / 8);

    IntegrationResult out;
    double total = 0.0, total_err = 0.0;

    auto add_segment = [&](double a, double b) {
        IntegrationResult r = integrate_adaptive(g, a, b, local);
        total += r.value;
        total_err += r.error_bound;
        out.subdivisions += r.subdivisions + 1;
        return r.value;
    };

    const double u0 = u_center - 2.0, u1 = u_center + 2.0;
    add_segment(u0, u1);

    auto tol_now = [&]() { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    // grow upward, then downward, until two consecutive quiet segments
    for (double u = u1;; u += seg_w) {
        if (u >= u_hard_hi)
            throw QuadratureError("integrate_improper: upper tail did not decay", total, total_err);
        double v1 = add_segment(u, u + seg_w);
        if (std::abs(v1) >= 0.25 * tol_now()) continue;
        double v2 = add_segment(u + seg_w, u + 2 * seg_w);
        if (std::abs(v2) < 0.25 * tol_now()) break;
        u += seg_w;
    }
    for (double u = u0;; u -= seg_w) {
        if (u <= u_hard_lo) break;  // e^u below 1e-300: nothing left of the origin
        double v1 = add_segment(u - seg_w, u);
        if (std::abs(v1) >= 0.25 * tol_now()) continue;
        double v2 = add_segment(u - 2 * seg_w, u - seg_w);
        if (std::abs(v2) < 0.25 * tol_now()) break;
        u -= seg_w;
    }

    out.value = total;
    out.error_bound = total_err;
    out.converged = total_err <= std::max(spec.abs_tol, 4.0 * spec.rel_tol * std::abs(total));
    if (!out.converged)
        throw QuadratureError("integrate_improper: requested tolerance not reached", total, total_err);
    return out;
}

// Log-space variant used by the sampling-formula integrals: integrates
// exp(log_f(lambda)) over (0, inf) and returns log of the integral.  A coarse
// scan locates the mode so the exponent can be rescaled before the adaptive
// pass; the result is independent of the rescaling.
template <class LogF>
inline double integrate_improper_log(const LogF& log_f, const QuadratureSpec& spec,
                                     double* error_bound = nullptr) {
    spec.validate();
    auto h = [&log_f](double u) { return log_f(std::exp(u)) + u; };

    double m = -std::numeric_limits<double>::infinity();
    for (double u = -48.0; u <= 480.0; u += 1.0) {
        double val = h(u);
        if (std::isfinite(val) && val > m) m = val;
    }
    if (!std::isfinite(m)) return -std::numeric_limits<double>::infinity();

    auto f_scaled = [&](double lam) {
        double lv = log_f(lam);
        if (!std::isfinite(lv)) return 0.0;
        return std::exp(lv - m);
    };
    IntegrationResult r = integrate_improper(f_scaled, spec);
    if (error_bound) *error_bound = r.error_bound;
    if (r.value <= 0.0) return -std::numeric_limits<double>::infinity();
    return m + std::log(r.value);
}

}  // namespace pdr
