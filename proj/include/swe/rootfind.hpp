#ifndef SWE_ROOTFIND_HPP
#define SWE_ROOTFIND_HPP

#include <cmath>
#include <functional>

#include "swe/errors.hpp"

namespace swe {

/// Bisection with a Newton-like secant polish. Requires f(lo) and f(hi) of
/// opposite sign. Converges when the relative step drops below rel_tol or
/// after max_iter halvings.
inline double solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol = 1e-15, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NumericalFailure("solve_bracketed: endpoints do not bracket a root", lo, hi);
    for (int it = 0; it < max_iter; ++it) {
        // secant proposal, clipped into the bracket; fall back to midpoint
        double mid = (lo * fhi - hi * flo) / (fhi - flo);
        const double lo_guard = lo + 0.25 * (hi - lo);
        const double hi_guard = hi - 0.25 * (hi - lo);
        if (!(mid > lo && mid < hi) || (it % 2 == 1)) mid = 0.5 * (lo + hi);
        else mid = std::min(std::max(mid, lo_guard), hi_guard);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (hi - lo <= rel_tol * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

/// Scans [lo, hi] with n uniform samples and returns the first subinterval
/// with a sign change, refined by solve_bracketed. Returns NaN if none.
inline double scan_and_solve(const std::function<double(double)>& f, double lo, double hi, int n,
                             double rel_tol = 1e-15) {
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / n;
        const double fx = f(x);
        if (f_prev == 0.0) return x_prev;
        if ((fx > 0.0) != (f_prev > 0.0)) return solve_bracketed(f, x_prev, x, rel_tol);
        x_prev = x;
        f_prev = fx;
    }
    return std::nan("");
}

/// Golden-section maximization on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         double rel_tol = 1e-12, int max_iter = 300) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > rel_tol * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace swe

#endif  // SWE_ROOTFIND_HPP
