#include "cmc/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

namespace {

// cosh(x) - 2H*sinh(x). For H > 1/2 this vanishes at x = T_H/2; the
// expm1 form keeps full precision near the root (dist = T_H - 2x is the
// caller-known distance of 2x from T_H).
double cosh_minus_2H_sinh(double H, double x, double dist) {
    if (H <= 0.5)
        return 0.5 * ((1.0 - 2.0 * H) * std::exp(x) + (1.0 + 2.0 * H) * std::exp(-x));
    return 0.5 * (2.0 * H - 1.0) * std::exp(x + dist) * (-std::expm1(-dist));
}

// (cosh(a) + 2H*sinh(a)) / sinh(b), stable for large arguments.
double g_plus_ratio(double H, double a, double b) {
    const double e2a = std::exp(-2.0 * a), e2b = std::exp(-2.0 * b);
    return std::exp(a - b) * ((1.0 + e2a) + 2.0 * H * (1.0 - e2a)) / (1.0 - e2b);
}

void validate_params(const ProfileParams& p) {
    if (!(p.H >= 0.0)) throw DomainError("mean curvature H must be >= 0");
    if (!(p.r > 0.0)) throw DomainError("neck radius r must be > 0");
}

// phi for finite r, in ratio form (no large cosh/sinh differences):
// phi(t) = sinh(r)/sinh(r+t) - 4H sinh(t/2) sinh(r+t/2)/sinh(r+t).
double phi_finite(double H, double r, double t) {
    if (t == 0.0) return 1.0;
    return sinh_ratio(r, r + t) -
           4.0 * H * std::sinh(0.5 * t) * sinh_ratio(r + 0.5 * t, r + t);
}

// 1 - phi^2 in fully factored form; dist_th = T_H - t (ignored for
// H <= 1/2). Vanishes only at t = 0 and t = T_H.
double one_minus_phi_sq(double H, double r, double t, double dist_th) {
    const double a = r + 0.5 * t, b = r + t;
    return 4.0 * std::sinh(0.5 * t) * sinh_ratio(a, b) * g_plus_ratio(H, a, b) *
           cosh_minus_2H_sinh(H, 0.5 * t, dist_th);
}

// Integrand of the profile height: phi/sqrt(1-phi^2), with t and the
// distance to T_H supplied separately for endpoint accuracy.
double height_integrand(double H, double r, double t, double dist_th) {
    const double omp = one_minus_phi_sq(H, r, t, dist_th);
    return phi_finite(H, r, t) / std::sqrt(omp);
}

double clamp_to_domain(double s, double hi, const char* what) {
    if (!(s >= 0.0)) throw DomainError(std::string(what) + ": s must be >= 0");
    if (s > hi) {
        if (s - hi > 1e-12 * std::max(1.0, hi))
            throw DomainError(std::string(what) + ": s = " + std::to_string(s) +
                              " beyond the profile domain");
        s = hi;
    }
    return s;
}

}  // namespace

double t_cutoff(double H) {
    if (!(H >= 0.0)) throw DomainError("t_cutoff: H must be >= 0");
    if (H <= 0.5) return kInf;
    return std::log1p(2.0 / (2.0 * H - 1.0));
}

double slope_ratio(const ProfileParams& params, double s) {
    if (!(params.H >= 0.0)) throw DomainError("slope_ratio: H must be >= 0");
    const double th = t_cutoff(params.H);
    s = clamp_to_domain(s, th, "slope_ratio");
    if (params.r == kInf)
        return (1.0 + 2.0 * params.H) * std::exp(-s) - 2.0 * params.H;
    validate_params(params);
    return phi_finite(params.H, params.r, s);
}

double hnod_eval(const ProfileParams& params, double s) {
    validate_params(params);
    if (params.r == kInf)
        throw DomainError("hnod_eval: r must be finite (horonod_eval handles r = +inf)");
    const double H = params.H, r = params.r;
    const double th = t_cutoff(H);
    s = clamp_to_domain(s, th, "hnod_eval");
    if (s == 0.0) return 0.0;

    // Distance from x to T_H without cancellation when the panel's upper
    // endpoint b is at (or near) T_H: dist = (T_H - b) + db.
    auto panel = [&](double a, double b) {
        const double tail = std::isfinite(th) ? th - b : kInf;
        return tanh_sinh(
            [&](double x, double da, double db) {
                const double t = (a == 0.0) ? da : x;
                const double dist = std::isfinite(tail) ? tail + db : kInf;
                return height_integrand(H, r, t, dist);
            },
            a, b, 1e-13, 1e-13);
    };

    const double xp = (H > 0.0) ? x_peak(H, r) : kInf;
    if (s <= xp) return panel(0.0, s);
    return panel(0.0, xp) + panel(xp, s);
}

double cat_eval(double r, double s) { return hnod_eval({0.0, r}, s); }

double hcap_eval(double H, double s) {
    if (!(H >= 0.5)) throw DomainError("hcap_eval: H must be >= 1/2");
    if (std::abs(H - 0.5) < 1e-8) {
        if (!(s >= 0.0)) throw DomainError("hcap_eval: s must be >= 0");
        return 2.0 - 2.0 * std::cosh(0.5 * s);
    }
    const double th = t_cutoff(H);
    s = clamp_to_domain(s, th, "hcap_eval");
    const double root = std::sqrt(4.0 * H * H - 1.0);
    // 1 - 4H^2 tanh^2(s/2) = (cosh - 2H sinh)(cosh + 2H sinh)/cosh^2 at s/2,
    // with the first factor in root-preserving form.
    const double x = 0.5 * s;
    const double f1 = cosh_minus_2H_sinh(H, x, th - s);
    const double f2 = std::cosh(x) + 2.0 * H * std::sinh(x);
    const double inner = std::max(0.0, f1 * f2) / sq(std::cosh(x));
    const double F_s = std::atan(std::sqrt(inner) / root);
    const double F_0 = std::atan(1.0 / root);
    return (4.0 * H / root) * (F_s - F_0);
}

double horonod_eval(double H, double s) {
    if (!(H >= 0.0)) throw DomainError("horonod_eval: H must be >= 0");
    const double th = t_cutoff(H);
    s = clamp_to_domain(s, th, "horonod_eval");
    double c = (1.0 + 2.0 * H) * std::exp(-s) - 2.0 * H;
    if (c > 1.0 || c < -1.0) {
        if (std::abs(c) - 1.0 > 1e-12)
            throw DomainError("horonod_eval: arccos argument out of range");
        c = std::clamp(c, -1.0, 1.0);
    }
    const double theta = std::acos(c);
    if (std::abs(H - 0.5) < 1e-8) return theta - std::tan(0.5 * theta);
    if (H < 0.5) {
        const double root = std::sqrt(1.0 - 4.0 * H * H);
        const double k = std::sqrt((1.0 - 2.0 * H) / (1.0 + 2.0 * H));
        return theta - (4.0 * H / root) * std::atanh(k * std::tan(0.5 * theta));
    }
    const double root = std::sqrt(4.0 * H * H - 1.0);
    const double k = std::sqrt((2.0 * H - 1.0) / (2.0 * H + 1.0));
    // atan(k tan(theta/2)) without evaluating tan at pi/2.
    double at;
    if (theta > 0.5 * M_PI) {
        const double cot = std::cos(0.5 * theta) / std::sin(0.5 * theta);
        at = 0.5 * M_PI - std::atan(cot / k);
    } else {
        at = std::atan(k * std::tan(0.5 * theta));
    }
    return theta - (4.0 * H / root) * at;
}

double x_peak(double H, double r) {
    if (!(H >= 0.0)) throw DomainError("x_peak: H must be >= 0");
    if (!(r > 0.0)) throw DomainError("x_peak: r must be > 0");
    if (H == 0.0) return kInf;
    if (r == kInf) return std::log1p(1.0 / (2.0 * H));
    return std::acosh(std::cosh(r) + std::sinh(r) / (2.0 * H)) - r;
}

double rho_zero(double H, double r) {
    if (!(H > 0.0)) throw DomainError("rho_zero: H must be > 0");
    if (!(r > 0.0) || r == kInf) throw DomainError("rho_zero: r must be finite and > 0");
    const ProfileParams params{H, r};
    const double xp = x_peak(H, r);
    const double th = t_cutoff(H);
    double lo = xp, hi;
    if (std::isfinite(th)) {
        hi = th;
    } else {
        hi = 2.0 * xp;
        double inc = std::max(1.0, xp);
        while (hnod_eval(params, hi) > 0.0) {
            hi += inc;
            inc *= 2.0;
            if (hi > 4000.0)
                throw ConvergenceError("rho_zero: no sign change up to s = 4000");
        }
    }
    if (!(hnod_eval(params, hi) <= 0.0))
        throw ConvergenceError("rho_zero: profile not negative at bracket end");
    return brent_root([&](double s) { return hnod_eval(params, s); },
                      lo, hi, 1e-9);
}

double max_height(const ProfileParams& params) {
    if (!(params.H >= 0.0)) throw DomainError("max_height: H must be >= 0");
    const double H = params.H;
    if (params.r == kInf) {
        if (H == 0.0) return 0.5 * M_PI;
        if (std::abs(H - 0.5) < 1e-8) return 0.5 * M_PI - 1.0;
        if (H < 0.5) {
            const double root = std::sqrt(1.0 - 4.0 * H * H);
            return 0.5 * M_PI - (4.0 * H / root) * std::atanh((1.0 - 2.0 * H) / root);
        }
        const double root = std::sqrt(4.0 * H * H - 1.0);
        return 0.5 * M_PI - (4.0 * H / root) * std::atan((2.0 * H - 1.0) / root);
    }
    validate_params(params);
    if (H == 0.0) {
        // Horizontal asymptote; the tail past s = 45 is below 1e-19.
        return hnod_eval(params, 45.0);
    }
    return hnod_eval(params, x_peak(H, params.r));
}

SlabBound h_slab(double H) {
    if (!(H >= 0.0)) throw DomainError("h_slab: H must be >= 0");
    SlabBound b;
    b.H = H;
    if (H == 0.0) {
        b.h_max = M_PI;
    } else if (std::abs(H - 0.5) < 1e-8) {
        b.h_max = M_PI - 2.0;
    } else if (H < 0.5) {
        const double root = std::sqrt(1.0 - 4.0 * H * H);
        b.h_max = M_PI - (8.0 * H / root) * std::atanh((1.0 - 2.0 * H) / root);
    } else {
        const double root = std::sqrt(4.0 * H * H - 1.0);
        b.h_max = M_PI - (8.0 * H / root) * std::atan((2.0 * H - 1.0) / root);
    }
    return b;
}

double ode_residual(const ProfileParams& params, double s, double step) {
    if (!(step > 0.0)) throw DomainError("ode_residual: step must be > 0");
    const double th = t_cutoff(params.H);
    if (!(s - 2.0 * step >= 0.0) || !(s + 2.0 * step <= th))
        throw DomainError("ode_residual: s too close to the domain endpoints");
    const double dphi = (slope_ratio(params, s + step) - slope_ratio(params, s - step)) /
                        (2.0 * step);
    const double kappa = (params.r == kInf) ? 1.0 : 1.0 / std::tanh(params.r + s);
    return dphi + slope_ratio(params, s) * kappa + 2.0 * params.H;
}

double flux_value(const ProfileParams& params, double s) {
    const double phi = slope_ratio(params, s);
    if (params.r == kInf) return std::exp(s) * (phi + 2.0 * params.H);
    return std::sinh(params.r + s) * phi + 2.0 * params.H * std::cosh(params.r + s);
}

double flux_residual(const ProfileParams& params, double s) {
    const double f0 = (params.r == kInf)
                          ? 1.0 + 2.0 * params.H
                          : std::sinh(params.r) + 2.0 * params.H * std::cosh(params.r);
    return flux_value(params, s) - f0;
}

std::vector<ProfileSample> profile_table(const ProfileParams& params,
                                         double s_max, int n) {
    if (n < 2) throw DomainError("profile_table: need at least 2 rows");
    if (!(s_max > 0.0) || !std::isfinite(s_max))
        throw DomainError("profile_table: s_max must be finite and > 0");
    std::vector<ProfileSample> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        ProfileSample row;
        row.s = s_max * i / (n - 1);
        row.height = (params.r == kInf) ? horonod_eval(params.H, row.s)
                                        : hnod_eval(params, row.s);
        row.phi = slope_ratio(params, row.s);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cmc
