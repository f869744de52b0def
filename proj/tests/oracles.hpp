#pragma once

// Independent reference computations for the tests. Deliberately separate
// from the library: direct slope formulas, adaptive Simpson, and a
// square-root substitution at the neck singularity (the library integrates
// with tanh-sinh in the original variable). Shares no code with src/.

#include <cmath>
#include <functional>

namespace oracle {

using Fn = std::function<double(double)>;

inline double simpson_rec(const Fn& f, double a, double b, double fa, double fm,
                          double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double simpson(const Fn& f, double a, double b, double tol = 1e-13) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Slope ratios phi(t) = u'/sqrt(1+u'^2) of the rotational profiles, with
// (1-phi)/t in sum-to-product form so the t -> 0 limit is clean.

struct NodoidPhi {
    double H, r;
    double phi(double t) const {
        return (2.0 * H * (std::cosh(r) - std::cosh(r + t)) + std::sinh(r)) /
               std::sinh(r + t);
    }
    double one_minus_over_t(double t) const {
        const double half = (t == 0.0) ? 0.5 : std::sinh(0.5 * t) / t;
        return 2.0 * half *
               (std::cosh(r + 0.5 * t) + 2.0 * H * std::sinh(r + 0.5 * t)) /
               std::sinh(r + t);
    }
};

struct HoroPhi {
    double H;
    double phi(double t) const {
        return (2.0 * H + 1.0) * std::exp(-t) - 2.0 * H;
    }
    double one_minus_over_t(double t) const {
        return (t == 0.0) ? (2.0 * H + 1.0)
                          : -(2.0 * H + 1.0) * std::expm1(-t) / t;
    }
};

// Height integral of phi/sqrt(1-phi^2) over [0, s] for a family with
// phi(0) = 1: substitute t = tau^2 on the singular half, plain Simpson on
// the rest. Valid for s strictly inside the profile domain.
template <class Family>
double neck_height(const Family& fam, double s) {
    auto sub = [&](double tau) {
        const double t = tau * tau;
        const double p = fam.phi(t);
        const double w_over_t = fam.one_minus_over_t(t) * (1.0 + p);
        return 2.0 * p / std::sqrt(w_over_t);
    };
    auto plain = [&](double t) {
        const double p = fam.phi(t);
        return p / std::sqrt(fam.one_minus_over_t(t) * t * (1.0 + p));
    };
    const double split = 0.5 * s;
    return simpson(sub, 0.0, std::sqrt(split)) + simpson(plain, split, s);
}

inline double hnod(double H, double r, double s) {
    return neck_height(NodoidPhi{H, r}, s);
}
inline double cat(double r, double s) { return neck_height(NodoidPhi{0.0, r}, s); }
inline double horonod(double H, double s) { return neck_height(HoroPhi{H}, s); }

// Cap profile phi = -2H tanh(t/2): regular at 0, so plain Simpson suffices
// for s strictly below the cutoff.
inline double hcap(double H, double s) {
    auto f = [H](double t) {
        const double p = -2.0 * H * std::tanh(0.5 * t);
        return p / std::sqrt(1.0 - p * p);
    };
    return simpson(f, 0.0, s);
}

inline double hyp_dist(double px, double py, double qx, double qy) {
    const double dd = (px - qx) * (px - qx) + (py - qy) * (py - qy);
    const double den = (1.0 - px * px - py * py) * (1.0 - qx * qx - qy * qy);
    return 2.0 * std::asinh(std::sqrt(dd / den));
}

}  // namespace oracle
