#pragma once

// Shared numerical kernels: tanh-sinh quadrature, Brent root bracketing,
// golden-section minimization. All routines are pure and thread-safe.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>

#include "cmc/errors.hpp"

namespace cmc {

inline double sq(double x) { return x * x; }

// sinh(a)/sinh(b) for 0 <= a, 0 < b, stable for large arguments.
inline double sinh_ratio(double a, double b) {
    return std::exp(a - b) * std::expm1(-2.0 * a) / std::expm1(-2.0 * b);
}

// Integrate f over (a, b) with the tanh-sinh (double-exponential) rule.
// The integrand is called as f(x, da, db) where da = x - a and db = b - x
// are exact endpoint offsets, so inverse-square-root endpoint singularities
// can be evaluated without cancellation. Converges when two consecutive
// level refinements agree within max(abs_tol, rel_tol*|I|).
template <class F>
double tanh_sinh(F&& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12) {
    if (!(b > a)) {
        if (b == a) return 0.0;
        throw DomainError("tanh_sinh: empty interval");
    }
    const double c = 0.5 * (b - a);
    const double t_max = 6.56;  // exp(-pi*sinh(t_max)) underflows

    // Contribution of the node at parameter t (t may be negative).
    auto node_term = [&](double t) {
        const double u = 1.5707963267948966 * std::sinh(std::abs(t));
        const double e2 = std::exp(-2.0 * u);
        const double den = 1.0 + e2;
        double d_near = 2.0 * c * e2 / den;   // offset from the near endpoint
        double d_far = 2.0 * c / den;         // offset from the far endpoint
        if (d_near <= 0.0) return 0.0;        // underflow: past resolvable range
        const double w = 1.5707963267948966 * std::cosh(t) * 4.0 * e2 / (den * den);
        double da, db, x;
        if (t >= 0.0) {
            da = d_far; db = d_near; x = b - d_near;
        } else {
            da = d_near; db = d_far; x = a + d_near;
        }
        return c * w * f(x, da, db);
    };

    // Level 0: h = 1, all integer nodes.
    double h = 1.0;
    double sum = node_term(0.0);
    for (int k = 1; k * h <= t_max; ++k) {
        const double term = node_term(k * h) + node_term(-k * h);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > 3) break;
    }
    double integral = h * sum;

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        // New nodes are the odd multiples of h.
        double add = 0.0;
        int stale = 0;
        for (int k = 1; k * h <= t_max; k += 2) {
            const double term = node_term(k * h) + node_term(-k * h);
            add += term;
            if (std::abs(term) < 1e-18 * (std::abs(sum) + std::abs(add))) {
                if (++stale > 1) break;
            } else {
                stale = 0;
            }
        }
        sum += add;
        const double next = h * sum;
        const double err = std::abs(next - integral);
        integral = next;
        if (level >= 3 && err <= std::max(abs_tol, rel_tol * std::abs(integral)))
            return integral;
    }
    throw ConvergenceError("tanh_sinh: no convergence at level 12", 0.0, 12);
}

// Brent's method on a bracketing interval [a, b] with f(a)*f(b) <= 0.
// Terminates when the bracket width reaches xtol or |f| <= ftol.
template <class F>
double brent_root(F&& f, double a, double b,
                  double xtol = 1e-13, double ftol = 0.0, int maxit = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw DomainError("brent_root: interval does not bracket a root");
    double cc = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < maxit; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) { cc = a; fc = fa; d = b - a; e = d; }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = cc; cc = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (cc - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= ftol) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == cc) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw ConvergenceError("brent_root: iteration limit", std::abs(fb), maxit);
}

// Golden-section minimizer on [a, b]; returns the abscissa of the minimum.
template <class F>
double golden_min(F&& f, double a, double b, double tol = 1e-10) {
    const double g = 0.6180339887498949;
    double x1 = b - g * (b - a);
    double x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - g * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + g * (b - a); f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace cmc
